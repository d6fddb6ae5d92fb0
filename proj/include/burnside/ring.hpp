#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "burnside/characters.hpp"
#include "burnside/functor_spec.hpp"
#include "json.hpp"

namespace burnside {

/// Canonical generator <a,A>: a subgroup conjugacy class together with the
/// lexicographically minimal representative of a frill orbit under the
/// normalizer action on the value group of the class representative.
struct BasisElement {
  int class_id;
  int frill;
  std::string label;
};

/// Sparse integer combination of canonical basis elements, keyed by index
/// into BurnsideRing::basis().
using RingElement = std::map<int, long long>;

/// Square matrix of marks, rows over the basis and columns over pairs
/// (subgroup class, character orbit of its value group), both in print
/// order. The orbit-count column M is appended on export only.
struct ExtendedMarkTable {
  std::vector<std::string> row_labels;
  std::vector<std::string> column_labels;
  std::vector<std::vector<long long>> marks;
  std::vector<long long> orbit_counts;

  [[nodiscard]] std::string to_csv() const {
    std::ostringstream out;
    for (const auto& c : column_labels) out << ',' << c;
    out << ",M\n";
    for (std::size_t i = 0; i < marks.size(); ++i) {
      out << row_labels[i];
      for (long long v : marks[i]) out << ',' << v;
      out << ',' << orbit_counts[i] << '\n';
    }
    return out.str();
  }

  [[nodiscard]] nlohmann::json to_json() const {
    return {{"rows", row_labels}, {"columns", column_labels}, {"marks", marks}, {"orbit_counts", orbit_counts}};
  }

  /// True when the mark block has full rank over Q, certified by a full
  /// rank mod a large prime (a nonzero determinant survives reduction mod
  /// all but finitely many primes; two are tried).
  [[nodiscard]] bool nonsingular() const {
    for (long long p : {2147483647LL, 1000000007LL})
      if (full_rank_mod(p)) return true;
    return false;
  }

 private:
  [[nodiscard]] bool full_rank_mod(long long p) const {
    const std::size_t n = marks.size();
    std::vector<std::vector<long long>> a(n, std::vector<long long>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i][j] = ((marks[i][j] % p) + p) % p;
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t piv = k;
      while (piv < n && a[piv][k] == 0) ++piv;
      if (piv == n) return false;
      std::swap(a[piv], a[k]);
      long long inv = 1, base = a[k][k], e = p - 2;
      while (e) {
        if (e & 1) inv = static_cast<long long>(static_cast<__int128>(inv) * base % p);
        base = static_cast<long long>(static_cast<__int128>(base) * base % p);
        e >>= 1;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        const long long f = static_cast<long long>(static_cast<__int128>(a[i][k]) * inv % p);
        if (f == 0) continue;
        for (std::size_t j = k; j < n; ++j)
          a[i][j] = ((a[i][j] - static_cast<long long>(static_cast<__int128>(f) * a[k][j] % p)) % p + p) % p;
      }
    }
    return true;
  }
};

/// The generalised Burnside ring of a finite permutation group decorated by
/// a bound functor: free Z-module on the canonical basis, with the
/// double-coset product, marks, duality, orbit counts and Omega.
class BurnsideRing {
 public:
  BurnsideRing(const FiniteGroup& G, const SubgroupClassification& cls, const DecorationFunctor& fun)
      : G_(&G), cls_(&cls), fun_(&fun) {
    // one orbit list per class: {0} first, then nontrivial orbit minima
    const int k = cls.n_classes();
    orbit_reps_.resize(k);
    for (int c = 0; c < k; ++c) {
      std::set<int> seen;
      for (int v = 0; v < fun.value(c).n_elements(); ++v) {
        if (seen.count(v)) continue;
        orbit_reps_[c].push_back(v);
        for (int n : fun.normalizer_of(c)) seen.insert(fun.act(c, n, v));
      }
    }
    // print order: every trivial frill in class order, then nontrivial
    // orbits in class order
    for (int c = 0; c < k; ++c) basis_.push_back({c, 0, cls.cls(c).label});
    for (int c = 0; c < k; ++c)
      for (std::size_t i = 1; i < orbit_reps_[c].size(); ++i)
        basis_.push_back({c, orbit_reps_[c][i], cls.cls(c).label + "'" +
                                                    (orbit_reps_[c].size() > 2 ? std::to_string(i) : "")});
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      index_[{basis_[i].class_id, basis_[i].frill}] = static_cast<int>(i);
      label_index_[basis_[i].label] = static_cast<int>(i);
    }
  }

  [[nodiscard]] const FiniteGroup& group() const { return *G_; }
  [[nodiscard]] const SubgroupClassification& classification() const { return *cls_; }
  [[nodiscard]] const DecorationFunctor& functor() const { return *fun_; }
  [[nodiscard]] int n_basis() const { return static_cast<int>(basis_.size()); }
  [[nodiscard]] const BasisElement& basis(int i) const { return basis_.at(i); }

  [[nodiscard]] int find_label(const std::string& label) const {
    const auto it = label_index_.find(label);
    if (it == label_index_.end()) throw std::invalid_argument("unknown basis label: " + label);
    return it->second;
  }

  /// Index of the canonical basis element for any frill of a class.
  [[nodiscard]] int basis_index(int class_id, int frill) const {
    int best = frill;
    for (int n : fun_->normalizer_of(class_id)) best = std::min(best, fun_->act(class_id, n, frill));
    return index_.at({class_id, best});
  }

  /// Canonical form of <frill, H> for an arbitrary subgroup H: conjugates H
  /// onto its class representative and minimizes the frill, which is given
  /// in the coordinates of the representative's value group (transported
  /// along the minimal conjugator, the convention used by concrete sets).
  [[nodiscard]] const BasisElement& canonicalize(const std::vector<int>& subgroup, int frill) const {
    const auto [c, g] = cls_->locate(subgroup);
    (void)g;
    return basis_[static_cast<std::size_t>(basis_index(c, frill))];
  }

  [[nodiscard]] RingElement element(const std::string& label, long long coeff = 1) const {
    return RingElement{{find_label(label), coeff}};
  }

  [[nodiscard]] RingElement one() const {
    for (int i = 0; i < n_basis(); ++i)
      if (cls_->cls(basis_[i].class_id).rep.order() == G_->order() && basis_[i].frill == 0)
        return RingElement{{i, 1}};
    throw std::logic_error("whole-group class missing");
  }

  [[nodiscard]] static RingElement add(const RingElement& x, const RingElement& y) {
    RingElement out = x;
    for (const auto& [i, c] : y)
      if ((out[i] += c) == 0) out.erase(i);
    return out;
  }

  [[nodiscard]] static RingElement scale(long long a, const RingElement& x) {
    RingElement out;
    if (a != 0)
      for (const auto& [i, c] : x) out[i] = a * c;
    return out;
  }

  [[nodiscard]] RingElement multiply(const RingElement& x, const RingElement& y) const {
    RingElement out;
    for (const auto& [i, ci] : x)
      for (const auto& [j, cj] : y)
        for (const auto& [t, ct] : basis_product(i, j))
          if ((out[t] += ci * cj * ct) == 0) out.erase(t);
    return out;
  }

  [[nodiscard]] RingElement dual(const RingElement& x) const {
    RingElement out;
    for (const auto& [i, c] : x) {
      const BasisElement& b = basis_[static_cast<std::size_t>(i)];
      const int t = basis_index(b.class_id, fun_->value(b.class_id).neg(b.frill));
      if ((out[t] += c) == 0) out.erase(t);
    }
    return out;
  }

  /// The equivariant orbit count M, linear over the basis.
  [[nodiscard]] long long euler(const RingElement& x) const {
    long long out = 0;
    for (const auto& [i, c] : x) {
      const BasisElement& b = basis_[static_cast<std::size_t>(i)];
      out += c * fun_->twisted_count(b.class_id, b.frill);
    }
    return out;
  }

  [[nodiscard]] static bool is_effective(const RingElement& x) {
    for (const auto& [i, c] : x)
      if (c < 0) return false;
    return true;
  }

  /// Number of simple objects of the functor category between the module
  /// categories of two effective elements.
  [[nodiscard]] long long fun_simple_count(const RingElement& m, const RingElement& n) const {
    if (!is_effective(m) || !is_effective(n)) throw std::invalid_argument("fun_simple_count needs effective elements");
    return euler(multiply(dual(m), n));
  }

  /// Multiplicities of the frill-forgotten permutation character, indexed
  /// by partitions of the degree. Requires the full symmetric group.
  [[nodiscard]] std::vector<long long> omega(const RingElement& x) const {
    const CharacterTable table = CharacterTable::symmetric(G_->degree());
    std::vector<long long> out(static_cast<std::size_t>(table.n_irreps()), 0);
    for (const auto& [i, c] : x) {
      const auto& H = cls_->cls(basis_[static_cast<std::size_t>(i)].class_id).rep.elems;
      const auto mults = table.decompose(permutation_character(*G_, H));
      for (std::size_t j = 0; j < out.size(); ++j) out[j] += c * mults[j];
    }
    return out;
  }

  /// Mark of x at the pair (class a_cls, character chi of its value group):
  /// the sum of chi over all transports of each basis frill along
  /// realizers, divided by the subgroup order. Exact by construction.
  [[nodiscard]] long long mark(int a_cls, int chi, const RingElement& x) const {
    long long out = 0;
    for (const auto& [i, c] : x) out += c * basis_mark(a_cls, chi, i);
    return out;
  }

  [[nodiscard]] ExtendedMarkTable extended_table_of_marks() const {
    ExtendedMarkTable t;
    const auto cols = columns();
    for (const auto& b : basis_) t.row_labels.push_back(b.label);
    for (const auto& [c, chi, label] : cols) t.column_labels.push_back(label);
    for (int i = 0; i < n_basis(); ++i) {
      std::vector<long long> row;
      row.reserve(cols.size());
      for (const auto& [c, chi, label] : cols) row.push_back(basis_mark(c, chi, i));
      t.marks.push_back(std::move(row));
      t.orbit_counts.push_back(euler(RingElement{{i, 1}}));
    }
    if (t.marks.size() != cols.size()) throw std::logic_error("mark table is not square");
    return t;
  }

  [[nodiscard]] RingElement parse(const std::string& text) const {
    RingElement out;
    std::size_t pos = 0;
    const auto skip = [&] {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip();
    if (pos == text.size()) throw std::invalid_argument("empty ring element");
    if (text.compare(pos, 1, "0") == 0 && pos + 1 == text.size()) return out;
    bool first = true;
    while (pos < text.size()) {
      long long sign = 1;
      skip();
      if (!first || text[pos] == '+' || text[pos] == '-') {
        if (pos == text.size() || (text[pos] != '+' && text[pos] != '-'))
          throw std::invalid_argument("expected + or - in ring element: " + text);
        sign = text[pos] == '-' ? -1 : 1;
        ++pos;
        skip();
      }
      first = false;
      long long coeff = 1;
      if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        const std::size_t digits = pos;
        long long value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
          value = value * 10 + (text[pos++] - '0');
        skip();
        if (pos < text.size() && text[pos] == '*') {
          coeff = value;
          ++pos;
          skip();
        } else {
          pos = digits;  // digit-initial label such as the trivial orbit "1"
        }
      }
      std::string label;
      while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '\''))
        label += text[pos++];
      if (label.empty()) throw std::invalid_argument("expected basis label in ring element: " + text);
      const int i = find_label(label);
      if ((out[i] += sign * coeff) == 0) out.erase(i);
      skip();
    }
    return out;
  }

  [[nodiscard]] std::string to_string(const RingElement& x) const {
    if (x.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [i, c] : x) {
      if (!first) out << (c < 0 ? " - " : " + ");
      else if (c < 0)
        out << "-";
      first = false;
      const long long a = c < 0 ? -c : c;
      if (a != 1) out << a << "*";
      out << basis_[static_cast<std::size_t>(i)].label;
    }
    return out.str();
  }

  [[nodiscard]] nlohmann::json to_json(const RingElement& x) const {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [i, c] : x) j[basis_[static_cast<std::size_t>(i)].label] = c;
    return j;
  }

  [[nodiscard]] RingElement from_json(const nlohmann::json& j) const {
    RingElement out;
    for (const auto& [k, v] : j.items()) {
      const long long c = v.get<long long>();
      if (c != 0) out[find_label(k)] = c;
    }
    return out;
  }

 private:
  /// All g with g rep(a) g^-1 inside rep(b), cached per class pair.
  [[nodiscard]] const std::vector<int>& realizers(int a, int b) const {
    auto it = realizer_cache_.find({a, b});
    if (it != realizer_cache_.end()) return it->second;
    std::vector<int> out;
    for (int g = 0; g < static_cast<int>(G_->order()); ++g)
      if (fun_->realizes(g, a, b)) out.push_back(g);
    return realizer_cache_.emplace(std::make_pair(a, b), std::move(out)).first->second;
  }

  [[nodiscard]] long long basis_mark(int a_cls, int chi, int row) const {
    const BasisElement& b = basis_.at(static_cast<std::size_t>(row));
    long long sum = 0;
    for (int g : realizers(a_cls, b.class_id)) sum += fun_->char_sign(a_cls, chi, fun_->pullback(g, a_cls, b.class_id, b.frill));
    const auto order = static_cast<long long>(cls_->cls(b.class_id).rep.order());
    if (sum % order != 0) throw std::logic_error("mark is not integral on " + b.label);
    return sum / order;
  }

  /// Column list (class, character, label): trivial characters of every
  /// class in class order, then nontrivial character-orbit minima.
  [[nodiscard]] std::vector<std::tuple<int, int, std::string>> columns() const {
    const int k = cls_->n_classes();
    std::vector<std::tuple<int, int, std::string>> cols;
    std::vector<std::vector<int>> reps(static_cast<std::size_t>(k));
    for (int c = 0; c < k; ++c) {
      if (fun_->value(c).exponent() > 2)
        throw std::invalid_argument("marks need 2-torsion values, class " + cls_->cls(c).label + " has exponent " +
                                    std::to_string(fun_->value(c).exponent()));
      std::set<int> seen;
      for (int chi = 0; chi < fun_->n_characters(c); ++chi) {
        if (seen.count(chi)) continue;
        reps[static_cast<std::size_t>(c)].push_back(chi);
        for (int n : fun_->normalizer_of(c)) seen.insert(dual_act(c, n, chi));
      }
    }
    for (int c = 0; c < k; ++c) cols.emplace_back(c, 0, cls_->cls(c).label);
    for (int c = 0; c < k; ++c) {
      const auto& r = reps[static_cast<std::size_t>(c)];
      for (std::size_t i = 1; i < r.size(); ++i)
        cols.emplace_back(c, r[i], cls_->cls(c).label + "'" + (r.size() > 2 ? std::to_string(i) : ""));
    }
    return cols;
  }

  /// Precomposition of a character with the action of a normalizer element,
  /// as an index into the characters of the class value group.
  [[nodiscard]] int dual_act(int c, int n, int chi) const {
    const AbelianGroupSpec& v = fun_->value(c);
    std::vector<int> coords(v.cyclic_orders.size());
    for (std::size_t i = 0; i < coords.size(); ++i) {
      std::vector<int> e(coords.size(), 0);
      e[i] = 1;
      coords[i] = fun_->char_sign(c, chi, fun_->act(c, n, v.index(e))) == -1 ? 1 : 0;
    }
    return v.index(coords);
  }

  [[nodiscard]] const RingElement& basis_product(int i, int j) const {
    auto it = product_cache_.find({i, j});
    if (it != product_cache_.end()) return it->second;
    const BasisElement& bi = basis_.at(static_cast<std::size_t>(i));
    const BasisElement& bj = basis_.at(static_cast<std::size_t>(j));
    const auto& A = cls_->cls(bi.class_id).rep;
    const auto& B = cls_->cls(bj.class_id).rep;
    RingElement out;
    for (int x : double_cosets(*G_, A, B)) {
      std::vector<char> in_xbx(G_->order(), 0);
      for (int b : B.elems) in_xbx[static_cast<std::size_t>(G_->conj(x, b))] = 1;
      std::vector<int> C;
      for (int a : A.elems)
        if (in_xbx[static_cast<std::size_t>(a)]) C.push_back(a);
      const auto [cC, g] = cls_->locate(C);
      const int v1 = fun_->pullback(g, cC, bi.class_id, bi.frill);
      const int v2 = fun_->pullback(G_->mult(G_->inv(x), g), cC, bj.class_id, bj.frill);
      const int t = basis_index(cC, fun_->value(cC).add(v1, v2));
      out[t] += 1;
    }
    return product_cache_.emplace(std::make_pair(i, j), std::move(out)).first->second;
  }

  const FiniteGroup* G_;
  const SubgroupClassification* cls_;
  const DecorationFunctor* fun_;
  std::vector<BasisElement> basis_;
  std::vector<std::vector<int>> orbit_reps_;
  std::map<std::pair<int, int>, int> index_;
  std::map<std::string, int> label_index_;
  mutable std::map<std::pair<int, int>, RingElement> product_cache_;
  mutable std::map<std::pair<int, int>, std::vector<int>> realizer_cache_;
};

}  // namespace burnside
