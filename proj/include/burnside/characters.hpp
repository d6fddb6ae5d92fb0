#pragma once

// ==== Symmetric group characters ====
//
// Ordinary character theory of S_n for small n: partitions, the character
// table via the Murnaghan-Nakayama rule, permutation characters of coset
// actions, and decomposition of class functions into irreducibles. Also the
// parser for graded multiplicity files (see data/f4a3.green).

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "burnside/group.hpp"

namespace burnside {

/// Weakly decreasing positive parts.
using Partition = std::vector<int>;

/// All partitions of n in lexicographically decreasing order, so (n) comes
/// first and (1,...,1) last. This order indexes both the irreducible
/// characters and the conjugacy classes of S_n throughout.
[[nodiscard]] inline std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int rest, int cap) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(rest, cap); part >= 1; --part) {
      cur.push_back(part);
      self(self, rest - part, part);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

[[nodiscard]] inline std::string partition_to_string(const Partition& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s;
}

/// Parses "3,1" into {3, 1}. Parts must be positive and weakly decreasing.
[[nodiscard]] inline Partition partition_from_string(const std::string& s) {
  if (s.empty() || s.back() == ',') throw std::invalid_argument("malformed partition string: " + s);
  Partition p;
  std::string tok;
  std::istringstream in(s);
  while (std::getline(in, tok, ',')) {
    std::size_t used = 0;
    int part = 0;
    try {
      part = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad partition part: " + tok);
    }
    if (used != tok.size() || part <= 0) throw std::invalid_argument("bad partition part: " + tok);
    p.push_back(part);
  }
  if (p.empty()) throw std::invalid_argument("empty partition string");
  if (!std::is_sorted(p.rbegin(), p.rend())) throw std::invalid_argument("partition parts must decrease: " + s);
  return p;
}

[[nodiscard]] inline long long factorial(int n) {
  long long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

/// Size of the S_n conjugacy class with cycle type rho: n! / z_rho where
/// z_rho = prod r^(m_r) m_r! over part multiplicities m_r.
[[nodiscard]] inline long long sym_class_size(const Partition& rho) {
  const int n = std::accumulate(rho.begin(), rho.end(), 0);
  long long z = 1;
  for (std::size_t i = 0; i < rho.size();) {
    std::size_t j = i;
    while (j < rho.size() && rho[j] == rho[i]) ++j;
    const auto m = static_cast<long long>(j - i);
    for (long long k = 1; k <= m; ++k) z *= rho[i] * k;
    i = j;
  }
  return factorial(n) / z;
}

namespace detail {

inline long long mn_rec(std::vector<int>& beta, const Partition& rho, std::size_t k) {
  if (k == rho.size()) return 1;
  const int r = rho[k];
  long long total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int b = beta[i];
    if (b < r) continue;
    if (std::find(beta.begin(), beta.end(), b - r) != beta.end()) continue;
    int leg = 0;
    for (int c : beta)
      if (c > b - r && c < b) ++leg;
    beta[i] = b - r;
    total += (leg % 2 ? -1 : 1) * mn_rec(beta, rho, k + 1);
    beta[i] = b;
  }
  return total;
}

}  // namespace detail

/// Murnaghan-Nakayama rule on beta numbers. Removing a cycle of length r
/// moves one beta number down by r; the move is legal when the target is
/// vacant, and its sign is (-1)^(number of beta numbers strictly between).
[[nodiscard]] inline long long mn_character(const Partition& lambda, const Partition& rho) {
  const int n = std::accumulate(lambda.begin(), lambda.end(), 0);
  if (std::accumulate(rho.begin(), rho.end(), 0) != n)
    throw std::invalid_argument("character argument must partition the same n");
  const auto rows = std::max<std::size_t>(lambda.size(), 1);
  std::vector<int> beta(rows);
  for (std::size_t i = 0; i < rows; ++i)
    beta[i] = (i < lambda.size() ? lambda[i] : 0) + static_cast<int>(rows - 1 - i);
  return detail::mn_rec(beta, rho, 0);
}

/// Character table of S_n. Rows are irreducible characters and columns are
/// conjugacy classes, both indexed by partitions(n); the trivial character
/// is row 0 and the identity class is the last column.
class CharacterTable {
 public:
  [[nodiscard]] static CharacterTable symmetric(int n) {
    CharacterTable t;
    t.n_ = n;
    t.labels_ = partitions(n);
    const auto k = t.labels_.size();
    t.class_sizes_.resize(k);
    for (std::size_t j = 0; j < k; ++j) t.class_sizes_[j] = sym_class_size(t.labels_[j]);
    t.values_.assign(k, std::vector<long long>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) t.values_[i][j] = mn_character(t.labels_[i], t.labels_[j]);
    return t;
  }

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int n_irreps() const { return static_cast<int>(labels_.size()); }
  [[nodiscard]] const std::vector<Partition>& labels() const { return labels_; }

  [[nodiscard]] int index_of(const Partition& p) const {
    auto it = std::find(labels_.begin(), labels_.end(), p);
    return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
  }

  [[nodiscard]] long long value(int irrep, int cls) const { return values_[irrep][cls]; }
  [[nodiscard]] const std::vector<long long>& row(int irrep) const { return values_[irrep]; }
  [[nodiscard]] long long degree(int irrep) const { return values_[irrep].back(); }
  [[nodiscard]] long long class_size(int cls) const { return class_sizes_[cls]; }

  /// Multiplicity vector of a class function given by its values per class.
  /// Throws if some inner product is not integral, which catches values
  /// that are not a virtual character.
  [[nodiscard]] std::vector<long long> decompose(const std::vector<long long>& values) const {
    if (values.size() != labels_.size()) throw std::invalid_argument("class function has wrong length");
    const long long order = factorial(n_);
    std::vector<long long> mult(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      long long s = 0;
      for (std::size_t j = 0; j < labels_.size(); ++j) s += class_sizes_[j] * values[j] * values_[i][j];
      if (s % order != 0) throw std::invalid_argument("not a virtual character of S_" + std::to_string(n_));
      mult[i] = s / order;
    }
    return mult;
  }

 private:
  int n_ = 0;
  std::vector<Partition> labels_;
  std::vector<std::vector<long long>> values_;
  std::vector<long long> class_sizes_;
};

/// Character of G acting on the cosets G/H, with values indexed by cycle
/// type in partitions(degree) order. G must be the full symmetric group on
/// its points so that cycle types separate its conjugacy classes.
[[nodiscard]] inline std::vector<long long> permutation_character(const FiniteGroup& G, const std::vector<int>& H) {
  const auto parts = partitions(G.degree());
  const auto classes = G.conjugacy_classes();
  if (classes.size() != parts.size() || G.order() != static_cast<std::size_t>(factorial(G.degree())))
    throw std::invalid_argument("permutation_character needs a full symmetric group");
  const std::vector<char> in_h = G.membership(H);
  std::vector<long long> out(parts.size());
  for (const auto& cls : classes) {
    const int g = cls.front();
    long long hits = 0;
    for (int x = 0; x < static_cast<int>(G.order()); ++x)
      if (in_h[G.conj(G.inv(x), g)]) ++hits;
    const auto type = G.elem(g).cycle_type();
    const auto it = std::find(parts.begin(), parts.end(), type);
    out[it - parts.begin()] = hits / static_cast<long long>(H.size());
  }
  return out;
}

// ==== Graded multiplicity files ====

/// One term of a graded multiplicity file: `mult` copies of the S_n-type
/// `type` in degree 2*q_power.
struct GreenEntry {
  long long mult = 0;
  int q_power = 0;
  Partition type;
};

/// Whitespace-separated `mult q_power partition` lines; `#` starts a
/// comment, blank lines are skipped.
class GreenFile {
 public:
  std::vector<GreenEntry> entries;

  [[nodiscard]] static GreenFile parse(std::istream& in) {
    GreenFile f;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream row(line);
      GreenEntry e;
      std::string type_tok;
      if (!(row >> e.mult)) continue;
      if (!(row >> e.q_power >> type_tok))
        throw std::invalid_argument("line " + std::to_string(lineno) + ": expected `mult q_power partition`");
      std::string extra;
      if (row >> extra) throw std::invalid_argument("line " + std::to_string(lineno) + ": trailing junk: " + extra);
      if (e.mult < 0 || e.q_power < 0)
        throw std::invalid_argument("line " + std::to_string(lineno) + ": negative entry");
      e.type = partition_from_string(type_tok);
      f.entries.push_back(std::move(e));
    }
    return f;
  }

  [[nodiscard]] static GreenFile load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse(in);
  }

  /// Total multiplicity of each S_n-type, all degrees summed, indexed by
  /// partitions(n). Throws if some entry partitions a different n.
  [[nodiscard]] std::vector<long long> total_multiplicities(int n) const {
    const auto parts = partitions(n);
    std::vector<long long> out(parts.size());
    for (const auto& e : entries) {
      const auto it = std::find(parts.begin(), parts.end(), e.type);
      if (it == parts.end())
        throw std::invalid_argument("entry type " + partition_to_string(e.type) + " does not partition " +
                                    std::to_string(n));
      out[it - parts.begin()] += e.mult;
    }
    return out;
  }
};

}  // namespace burnside
