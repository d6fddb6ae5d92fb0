#pragma once

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "burnside/characters.hpp"
#include "burnside/ring.hpp"

namespace burnside {

/// Multiplicity of each irreducible S_n-character, in partitions(n) order.
struct CharacterTarget {
  std::vector<long long> multiplicities;

  [[nodiscard]] long long degree(const CharacterTable& table) const {
    long long d = 0;
    for (std::size_t i = 0; i < multiplicities.size(); ++i)
      d += multiplicities[i] * table.degree(static_cast<int>(i));
    return d;
  }
};

[[nodiscard]] inline CharacterTarget target_from_green(const GreenFile& green, int n) {
  return {green.total_multiplicities(n)};
}

struct SearchConstraints {
  long long min_left_cell = 0;
  long long big_cell_threshold = 0;
  long long min_big_cells = 0;
  long long min_double_cell = 0;
};

/// A decorated element of the fixed candidate family, with its cell data.
struct Candidate {
  RingElement element;
  int eps = 0, alpha = 0, beta = 0, delta = 0;
  long long double_cell = 0;
  std::vector<long long> partition;  // ascending left-cell sizes

  [[nodiscard]] bool undecorated() const { return alpha == 0 && beta == 0 && delta == 0; }
};

namespace detail {

[[nodiscard]] inline std::vector<int> plain_basis(const BurnsideRing& R) {
  std::vector<int> out;
  for (int i = 0; i < R.n_basis(); ++i)
    if (R.basis(i).frill == 0) out.push_back(i);
  return out;
}

}  // namespace detail

/// All effective undecorated x with Omega(x) = target, containing the
/// required element when one is given. Exhaustive search over the classes
/// in basis order; the coefficient of each class is capped componentwise by
/// the residual multiplicities (every orbit character contains the trivial
/// character once, so the cap is finite).
[[nodiscard]] inline std::vector<RingElement> solve_effective(const BurnsideRing& R, const CharacterTarget& target,
                                                              const RingElement* required = nullptr) {
  const std::vector<int> plain = detail::plain_basis(R);
  std::vector<std::vector<long long>> rows;
  rows.reserve(plain.size());
  for (int i : plain) rows.push_back(R.omega(RingElement{{i, 1}}));

  std::vector<long long> residual = target.multiplicities;
  if (required != nullptr) {
    if (!BurnsideRing::is_effective(*required)) throw std::invalid_argument("solve_effective: required subset must be effective");
    const auto base = R.omega(*required);
    if (base.size() != residual.size()) throw std::invalid_argument("solve_effective: target has wrong arity");
    for (std::size_t i = 0; i < residual.size(); ++i) residual[i] -= base[i];
    for (long long r : residual)
      if (r < 0) return {};
  }
  if (!rows.empty() && rows.front().size() != residual.size())
    throw std::invalid_argument("solve_effective: target has wrong arity");

  std::vector<RingElement> out;
  std::vector<long long> coeff(plain.size(), 0);
  const auto walk = [&](auto&& self, std::size_t at) -> void {
    if (at == plain.size()) {
      if (std::all_of(residual.begin(), residual.end(), [](long long r) { return r == 0; })) {
        RingElement x = required ? *required : RingElement{};
        for (std::size_t i = 0; i < plain.size(); ++i)
          if (coeff[i] != 0) x[plain[i]] += coeff[i];
        out.push_back(std::move(x));
      }
      return;
    }
    const auto& row = rows[at];
    long long cap = std::numeric_limits<long long>::max();
    for (std::size_t p = 0; p < row.size(); ++p)
      if (row[p] > 0) cap = std::min(cap, residual[p] / row[p]);
    for (long long k = 0; k <= cap; ++k) {
      coeff[at] = k;
      self(self, at + 1);
      for (std::size_t p = 0; p < row.size(); ++p) residual[p] -= row[p];
    }
    for (std::size_t p = 0; p < row.size(); ++p) residual[p] += (cap + 1) * row[p];
    coeff[at] = 0;
  };
  walk(walk, 0);
  return out;
}

/// Independent check of solve_effective: walk the whole coefficient box
/// bounded only by the degree equation and compare raw character values at
/// the leaves. Shares no pruning logic with the solver.
[[nodiscard]] inline std::vector<RingElement> solve_effective_naive(const BurnsideRing& R,
                                                                    const CharacterTarget& target) {
  const FiniteGroup& G = R.group();
  const CharacterTable table = CharacterTable::symmetric(G.degree());
  const std::vector<int> plain = detail::plain_basis(R);
  const std::size_t ncls = static_cast<std::size_t>(table.n_irreps());

  std::vector<long long> want(ncls, 0);
  for (std::size_t i = 0; i < target.multiplicities.size(); ++i)
    for (std::size_t j = 0; j < ncls; ++j)
      want[j] += target.multiplicities[i] * table.value(static_cast<int>(i), static_cast<int>(j));

  std::vector<std::vector<long long>> chars;
  std::vector<long long> index;
  for (int i : plain) {
    const auto& rep = R.classification().cls(R.basis(i).class_id).rep;
    chars.push_back(permutation_character(G, rep.elems));
    index.push_back(static_cast<long long>(G.order() / rep.order()));
  }
  const long long degree = target.degree(table);

  std::vector<RingElement> out;
  std::vector<long long> coeff(plain.size(), 0);
  std::vector<long long> values(ncls, 0);
  const auto walk = [&](auto&& self, std::size_t at, long long rem) -> void {
    if (at == plain.size()) {
      if (rem == 0 && values == want) {
        RingElement x;
        for (std::size_t i = 0; i < plain.size(); ++i)
          if (coeff[i] != 0) x[plain[i]] = coeff[i];
        out.push_back(std::move(x));
      }
      return;
    }
    for (long long k = 0; k * index[at] <= rem; ++k) {
      coeff[at] = k;
      self(self, at + 1, rem - k * index[at]);
      for (std::size_t j = 0; j < ncls; ++j) values[j] += chars[at][j];
    }
    const long long used = rem / index[at] + 1;
    for (std::size_t j = 0; j < ncls; ++j) values[j] -= used * chars[at][j];
    coeff[at] = 0;
  };
  walk(walk, 0, degree);
  return out;
}

[[nodiscard]] inline long long double_cell_size(const BurnsideRing& R, const RingElement& c) {
  return R.euler(R.multiply(c, R.dual(c)));
}

/// Left-cell sizes: each orbit summand with multiplicity k contributes k
/// copies of M(c * summand). Ascending.
[[nodiscard]] inline std::vector<long long> left_cell_partition(const BurnsideRing& R, const RingElement& c) {
  std::vector<long long> out;
  for (const auto& [i, k] : c) {
    const long long cell = R.euler(R.multiply(c, RingElement{{i, 1}}));
    for (long long t = 0; t < k; ++t) out.push_back(cell);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// The candidate family: the undecorated solution with parameter eps, with
/// alpha / beta / delta of its square, dihedral and Klein orbits decorated.
[[nodiscard]] inline RingElement decorated_family(const BurnsideRing& R, int eps, int alpha, int beta, int delta) {
  RingElement x;
  const auto put = [&](const char* label, long long k) {
    if (k < 0) throw std::invalid_argument("decorated_family: parameters leave the box");
    if (k > 0) x[R.find_label(label)] = k;
  };
  put("S4", 15 + eps - alpha);
  put("S4'", alpha);
  put("S3", 17 - eps);
  put("D8", 9 - eps - beta);
  put("D8'", beta);
  put("C2", 1);
  put("K1", eps - delta);
  put("K1'", delta);
  return x;
}

[[nodiscard]] inline RingElement y_family(const BurnsideRing& R, int eps) { return decorated_family(R, eps, 0, 0, 0); }

[[nodiscard]] inline RingElement x_family(const BurnsideRing& R, int eps) {
  RingElement x;
  const auto put = [&](const char* label, long long k) {
    if (k > 0) x[R.find_label(label)] = k;
  };
  put("S4", 13 + eps);
  put("S3", 19 - eps);
  put("D8", 9 - eps);
  put("C4", 1);
  put("K1", eps);
  return x;
}

/// Published closed form for the double cell size of the decorated family,
/// with the two Klein-decoration variables identified; cross-check only,
/// never the source of truth.
[[nodiscard]] inline long long double_cell_polynomial(long long e, long long a, long long b, long long d) {
  return 4 * e * e - 4 * e * a - 12 * e * d + 30 * e + 4 * a * a + 12 * a * b + 12 * a * d - 114 * a + 12 * b * b +
         12 * b * d - 198 * b + 12 * d * d - 144 * d + 7084;
}

/// Outcome of checking the published closed form against computed double
/// cell sizes over the whole parameter box. `fitted` holds the exact
/// quadratic interpolated from the computed sizes, in monomial order
/// e^2, ea, eb, ed, e, a^2, ab, ad, a, b^2, bd, b, d^2, d, 1.
struct PolynomialCheck {
  long long printed_mismatches = 0;
  bool printed_matches = false;
  std::array<long long, 15> fitted{};
  bool fitted_consistent = false;

  [[nodiscard]] static constexpr std::array<long long, 15> printed() {
    return {4, -4, 0, -12, 30, 4, 12, 12, -114, 12, 12, -198, 12, -144, 7084};
  }

  [[nodiscard]] long long fitted_value(long long e, long long a, long long b, long long d) const {
    const long long m[15] = {e * e, e * a, e * b, e * d, e, a * a, a * b, a * d, a, b * b, b * d, b, d * d, d, 1};
    long long s = 0;
    for (int i = 0; i < 15; ++i) s += fitted[static_cast<std::size_t>(i)] * m[i];
    return s;
  }
};

[[nodiscard]] inline Candidate make_candidate(const BurnsideRing& R, int eps, int alpha, int beta, int delta) {
  Candidate c;
  c.eps = eps;
  c.alpha = alpha;
  c.beta = beta;
  c.delta = delta;
  c.element = decorated_family(R, eps, alpha, beta, delta);
  c.double_cell = double_cell_size(R, c.element);
  c.partition = left_cell_partition(R, c.element);
  return c;
}

/// Every decoration of the family over the full parameter box, in
/// lexicographic (eps, alpha, beta, delta) order.
[[nodiscard]] inline std::vector<Candidate> enumerate_decorations(const BurnsideRing& R) {
  std::vector<Candidate> out;
  for (int eps = 0; eps <= 9; ++eps)
    for (int alpha = 0; alpha <= 15 + eps; ++alpha)
      for (int beta = 0; beta <= 9 - eps; ++beta)
        for (int delta = 0; delta <= eps; ++delta) out.push_back(make_candidate(R, eps, alpha, beta, delta));
  return out;
}

/// Exhaustive comparison of computed double cell sizes with the published
/// closed form; any mismatch is reported, not patched. Also interpolates
/// the exact quadratic through the computed sizes so a discrepancy can be
/// stated as a corrected form.
[[nodiscard]] inline PolynomialCheck polynomial_cross_check(const BurnsideRing& R,
                                                            const std::vector<Candidate>& universe) {
  PolynomialCheck out;
  const auto f = [&](int e, int a, int b, int d) { return make_candidate(R, e, a, b, d).double_cell; };

  const long long f0 = f(0, 0, 0, 0);
  out.fitted[14] = f0;
  out.fitted[0] = (f(2, 0, 0, 0) - 2 * f(1, 0, 0, 0) + f0) / 2;  // e^2
  out.fitted[4] = f(1, 0, 0, 0) - f0 - out.fitted[0];            // e
  out.fitted[5] = (f(0, 2, 0, 0) - 2 * f(0, 1, 0, 0) + f0) / 2;  // a^2
  out.fitted[8] = f(0, 1, 0, 0) - f0 - out.fitted[5];            // a
  out.fitted[9] = (f(0, 0, 2, 0) - 2 * f(0, 0, 1, 0) + f0) / 2;  // b^2
  out.fitted[11] = f(0, 0, 1, 0) - f0 - out.fitted[9];           // b
  out.fitted[12] = (f(2, 0, 0, 2) - 2 * f(2, 0, 0, 1) + f(2, 0, 0, 0)) / 2;        // d^2
  out.fitted[3] = f(2, 0, 0, 1) - f(1, 0, 0, 1) - f(2, 0, 0, 0) + f(1, 0, 0, 0);   // ed
  out.fitted[13] = f(1, 0, 0, 1) - f(1, 0, 0, 0) - out.fitted[12] - out.fitted[3]; // d
  out.fitted[1] = f(1, 1, 0, 0) - f(1, 0, 0, 0) - f(0, 1, 0, 0) + f0;              // ea
  out.fitted[2] = f(1, 0, 1, 0) - f(1, 0, 0, 0) - f(0, 0, 1, 0) + f0;              // eb
  out.fitted[6] = f(0, 1, 1, 0) - f(0, 1, 0, 0) - f(0, 0, 1, 0) + f0;              // ab
  out.fitted[7] = f(1, 1, 0, 1) - f(1, 1, 0, 0) - f(1, 0, 0, 1) + f(1, 0, 0, 0);   // ad
  out.fitted[10] = f(1, 0, 1, 1) - f(1, 0, 1, 0) - f(1, 0, 0, 1) + f(1, 0, 0, 0);  // bd

  out.fitted_consistent = true;
  for (const auto& c : universe) {
    if (c.double_cell != double_cell_polynomial(c.eps, c.alpha, c.beta, c.delta)) ++out.printed_mismatches;
    if (c.double_cell != out.fitted_value(c.eps, c.alpha, c.beta, c.delta)) out.fitted_consistent = false;
  }
  out.printed_matches = out.printed_mismatches == 0;
  return out;
}

[[nodiscard]] inline std::vector<Candidate> filter_constraints(const std::vector<Candidate>& candidates,
                                                               const SearchConstraints& k) {
  std::vector<Candidate> out;
  for (const auto& c : candidates) {
    if (c.double_cell < k.min_double_cell) continue;
    if (!c.partition.empty() && c.partition.front() < k.min_left_cell) continue;
    long long big = 0;
    for (long long p : c.partition) big += p >= k.big_cell_threshold;
    if (big < k.min_big_cells) continue;
    out.push_back(c);
  }
  return out;
}

/// Elimination chain for the second solution family, plus the bound on the
/// decoration parameter of the surviving one.
struct EliminationReport {
  std::vector<long long> x_c4_cell;        // per eps: M(X_eps * <C4>)
  std::vector<long long> y_c2_cell;        // per eps: M(Y_eps * <C2>)
  std::vector<long long> y_c4_cell;        // per eps: M(Y_eps * <C4>)
  std::string cell_151_factor;             // which of C2 / C4 yields the 151 cell
  std::vector<long long> small_cell_count; // per eps: left cells of size <= small_cell_bound
  long long small_cell_bound = 0;
  long long max_small_cells = 0;
  std::vector<int> epsilon_allowed;
};

[[nodiscard]] inline EliminationReport rule_out_X_family(const BurnsideRing& R, long long min_left_cell = 151,
                                                         long long small_cell_bound = 153,
                                                         long long max_small_cells = 12) {
  EliminationReport rep;
  rep.small_cell_bound = small_cell_bound;
  rep.max_small_cells = max_small_cells;
  const RingElement c2{{R.find_label("C2"), 1}};
  const RingElement c4{{R.find_label("C4"), 1}};
  for (int eps = 0; eps <= 9; ++eps) {
    const RingElement X = x_family(R, eps), Y = y_family(R, eps);
    rep.x_c4_cell.push_back(R.euler(R.multiply(X, c4)));
    rep.y_c2_cell.push_back(R.euler(R.multiply(Y, c2)));
    rep.y_c4_cell.push_back(R.euler(R.multiply(Y, c4)));
    long long small = 0;
    for (long long p : left_cell_partition(R, Y)) small += p <= small_cell_bound;
    rep.small_cell_count.push_back(small);
    if (small <= max_small_cells) rep.epsilon_allowed.push_back(eps);
  }
  const bool c2_match = std::all_of(rep.y_c2_cell.begin(), rep.y_c2_cell.end(),
                                    [&](long long v) { return v == min_left_cell; });
  const bool c4_match = std::all_of(rep.y_c4_cell.begin(), rep.y_c4_cell.end(),
                                    [&](long long v) { return v == min_left_cell; });
  rep.cell_151_factor = c2_match && c4_match ? "both" : c2_match ? "C2" : c4_match ? "C4" : "neither";
  return rep;
}

/// The involution pairing each candidate with its twin: multiplication by
/// the nontrivially decorated one-point set. That element squares to the
/// identity, so c and twin(c) have the same c * dual(c); decorations whose
/// class restricts the decoration trivially from the full group are left
/// unchanged by the twist.
[[nodiscard]] inline RingElement twin_of(const BurnsideRing& R, const RingElement& c) {
  const auto& cls = R.classification();
  int full = -1;
  for (int i = 0; i < cls.n_classes(); ++i)
    if (cls.cls(i).rep.order() == R.group().order()) full = i;
  if (full < 0 || R.functor().value(full).n_elements() < 2)
    throw std::invalid_argument("twin_of: full orbit carries no nontrivial decoration");
  RingElement unit;
  unit[R.basis_index(full, 1)] = 1;
  return R.multiply(c, unit);
}

/// Pairs of survivors with equal c * dual(c). Each pair must contain an
/// undecorated member; a candidate without a partner is a data error.
[[nodiscard]] inline std::vector<std::pair<int, int>> pair_twins(const BurnsideRing& R,
                                                                 const std::vector<Candidate>& survivors) {
  std::map<RingElement, std::vector<int>> groups;
  for (int i = 0; i < static_cast<int>(survivors.size()); ++i)
    groups[R.multiply(survivors[static_cast<std::size_t>(i)].element,
                      R.dual(survivors[static_cast<std::size_t>(i)].element))]
        .push_back(i);
  std::vector<std::pair<int, int>> out;
  for (const auto& [square, members] : groups) {
    if (members.size() != 2)
      throw std::runtime_error("pair_twins: " +
                               R.to_string(survivors[static_cast<std::size_t>(members.front())].element) +
                               " has no unique partner");
    int plain = -1, twin = -1;
    for (int m : members) (survivors[static_cast<std::size_t>(m)].undecorated() && plain < 0 ? plain : twin) = m;
    if (plain < 0)
      throw std::runtime_error("pair_twins: pair of " +
                               R.to_string(survivors[static_cast<std::size_t>(members.front())].element) +
                               " has no undecorated member");
    out.emplace_back(plain, twin);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// "151, 153^11, 179^21" style rendering, ascending sizes.
[[nodiscard]] inline std::string partition_exponent_string(const std::vector<long long>& partition) {
  std::string out;
  for (std::size_t i = 0; i < partition.size();) {
    std::size_t j = i;
    while (j < partition.size() && partition[j] == partition[i]) ++j;
    if (!out.empty()) out += ", ";
    out += std::to_string(partition[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

[[nodiscard]] inline std::string candidates_text_table(const BurnsideRing& R, const std::vector<Candidate>& cs) {
  std::ostringstream out;
  out << "set | double cell | left cells\n";
  for (const auto& c : cs)
    out << R.to_string(c.element) << " | " << c.double_cell << " | " << partition_exponent_string(c.partition)
        << "\n";
  return out.str();
}

[[nodiscard]] inline nlohmann::json candidates_json(const BurnsideRing& R, const std::vector<Candidate>& cs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : cs)
    arr.push_back({{"set", R.to_string(c.element)},
                   {"coefficients", R.to_json(c.element)},
                   {"parameters", {{"eps", c.eps}, {"alpha", c.alpha}, {"beta", c.beta}, {"delta", c.delta}}},
                   {"double_cell", c.double_cell},
                   {"left_cells", c.partition}});
  return arr;
}

}  // namespace burnside
