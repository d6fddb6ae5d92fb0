#pragma once

#include <cstddef>
#include <optional>
#include <queue>
#include <unordered_map>
#include <utility>

#include "burnside/perm.hpp"

namespace burnside {

// ==== FiniteGroup ====

/// A finite permutation group held as its full, canonically ordered element
/// list (lexicographic on image arrays, so the identity sits at index 0).
///
/// All downstream canonical forms (class representatives, double-coset
/// representatives, basis order) derive from this element order. Orders up to
/// a configurable cap (default 10,000) are supported; a full multiplication
/// table is materialized only for small orders.
class FiniteGroup {
 public:
  static constexpr std::size_t kDefaultSizeCap = 10000;

  /// Closure of `generators` under composition. Empty generator lists are
  /// allowed and produce the trivial group of the given degree.
  [[nodiscard]] static FiniteGroup generate(const std::vector<Perm>& generators, int degree_if_empty = 1,
                                            std::size_t size_cap = kDefaultSizeCap) {
    int degree = generators.empty() ? degree_if_empty : generators.front().degree();
    for (const Perm& g : generators)
      if (g.degree() != degree) throw std::invalid_argument("generate: degree mismatch among generators");

    std::vector<Perm> elems{Perm::identity(degree)};
    std::unordered_map<std::string, int> index{{key_of(elems[0]), 0}};
    std::queue<int> work;
    work.push(0);
    while (!work.empty()) {
      Perm cur = elems[static_cast<std::size_t>(work.front())];
      work.pop();
      for (const Perm& g : generators) {
        Perm next = cur.compose(g);
        auto [it, fresh] = index.try_emplace(key_of(next), static_cast<int>(elems.size()));
        if (fresh) {
          elems.push_back(std::move(next));
          if (elems.size() > size_cap)
            throw std::runtime_error("generate: closure exceeds size cap " + std::to_string(size_cap));
          work.push(it->second);
        }
      }
    }
    return FiniteGroup(degree, std::move(elems));
  }

  /// Full symmetric group on n points, 1 <= n <= 6.
  [[nodiscard]] static FiniteGroup symmetric(int n) {
    if (n < 1 || n > 6) throw std::invalid_argument("symmetric: n out of range [1,6]");
    std::vector<std::uint8_t> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), std::uint8_t{0});
    std::vector<Perm> elems;
    do {
      elems.emplace_back(im);
    } while (std::next_permutation(im.begin(), im.end()));  // emits lexicographic order
    return FiniteGroup(n, std::move(elems));
  }

  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] std::size_t order() const { return elems_.size(); }
  [[nodiscard]] const Perm& elem(int i) const { return elems_[static_cast<std::size_t>(i)]; }
  [[nodiscard]] int identity_index() const { return 0; }

  /// Index of p in canonical order, or -1 if p is not an element.
  [[nodiscard]] int index_of(const Perm& p) const {
    auto it = index_.find(key_of(p));
    return it == index_.end() ? -1 : it->second;
  }

  /// Index of elem(i) composed with elem(j), applying j first.
  [[nodiscard]] int mult(int i, int j) const {
    if (!mult_table_.empty()) return mult_table_[static_cast<std::size_t>(i) * order() + static_cast<std::size_t>(j)];
    int r = index_of(elem(i).compose(elem(j)));
    assert(r >= 0 && "mult: group is not closed");
    return r;
  }

  [[nodiscard]] int inv(int i) const { return inv_[static_cast<std::size_t>(i)]; }

  /// Conjugate g h g^-1.
  [[nodiscard]] int conj(int g, int h) const { return mult(mult(g, h), inv(g)); }

  /// Conjugacy classes of elements, each sorted, ordered by minimal member;
  /// the identity's class comes first.
  [[nodiscard]] std::vector<std::vector<int>> conjugacy_classes() const {
    std::vector<std::vector<int>> classes;
    std::vector<char> seen(order(), 0);
    for (int h = 0; h < static_cast<int>(order()); ++h) {
      if (seen[h]) continue;
      std::vector<int> cls;
      for (int g = 0; g < static_cast<int>(order()); ++g) {
        int c = conj(g, h);
        if (!seen[c]) {
          seen[c] = 1;
          cls.push_back(c);
        }
      }
      std::sort(cls.begin(), cls.end());
      classes.push_back(std::move(cls));
    }
    return classes;
  }

  [[nodiscard]] std::vector<int> centralizer(int g) const {
    std::vector<int> out;
    for (int h = 0; h < static_cast<int>(order()); ++h)
      if (mult(h, g) == mult(g, h)) out.push_back(h);
    return out;
  }

  /// Normalizer of the subgroup H (sorted element indices): {g : gHg^-1 = H}.
  [[nodiscard]] std::vector<int> normalizer(const std::vector<int>& H) const {
    require_subgroup(H, "normalizer");
    std::vector<char> in_h = membership(H);
    std::vector<int> out;
    for (int g = 0; g < static_cast<int>(order()); ++g) {
      bool keeps = true;
      for (int h : H)
        if (!in_h[conj(g, h)]) { keeps = false; break; }
      if (keeps) out.push_back(g);  // gHg^-1 ⊆ H forces equality (finite H)
    }
    return out;
  }

  /// Subgroup generated by the given element indices, as sorted indices.
  [[nodiscard]] std::vector<int> closure(const std::vector<int>& seed) const {
    std::vector<char> in(order(), 0);
    std::vector<int> elems{identity_index()};
    in[identity_index()] = 1;
    std::queue<int> work;
    work.push(identity_index());
    for (int s : seed)
      if (!in[s]) {
        in[s] = 1;
        elems.push_back(s);
        work.push(s);
      }
    while (!work.empty()) {
      int cur = work.front();
      work.pop();
      for (int s : seed) {
        int next = mult(cur, s);
        if (!in[next]) {
          in[next] = 1;
          elems.push_back(next);
          work.push(next);
        }
      }
    }
    std::sort(elems.begin(), elems.end());
    return elems;
  }

  [[nodiscard]] bool is_subgroup(const std::vector<int>& H) const {
    if (H.empty()) return false;
    std::vector<char> in_h = membership(H);
    if (!in_h[identity_index()]) return false;
    for (int a : H)
      for (int b : H)
        if (!in_h[mult(a, b)]) return false;
    return true;
  }

  /// Membership bitmap over element indices for a sorted index list.
  [[nodiscard]] std::vector<char> membership(const std::vector<int>& H) const {
    std::vector<char> in(order(), 0);
    for (int h : H) in[static_cast<std::size_t>(h)] = 1;
    return in;
  }

 private:
  FiniteGroup(int degree, std::vector<Perm> elems) : degree_(degree), elems_(std::move(elems)) {
    std::sort(elems_.begin(), elems_.end());
    index_.reserve(elems_.size() * 2);
    for (int i = 0; i < static_cast<int>(elems_.size()); ++i) {
      bool fresh = index_.emplace(key_of(elems_[static_cast<std::size_t>(i)]), i).second;
      if (!fresh) throw std::invalid_argument("FiniteGroup: duplicate elements");
    }
    assert(elems_[0].is_identity() && "canonical order must start at the identity");
    if (order() <= kMultTableMaxOrder) {
      mult_table_.resize(order() * order());
      for (std::size_t i = 0; i < order(); ++i)
        for (std::size_t j = 0; j < order(); ++j) {
          int r = index_of(elems_[i].compose(elems_[j]));
          if (r < 0) throw std::invalid_argument("FiniteGroup: element list not closed");
          mult_table_[i * order() + j] = r;
        }
    } else {
      for (std::size_t i = 0; i < order(); ++i)
        for (std::size_t j = 0; j < order(); ++j)
          if (index_of(elems_[i].compose(elems_[j])) < 0) throw std::invalid_argument("FiniteGroup: element list not closed");
    }
    inv_.resize(order());
    for (int i = 0; i < static_cast<int>(order()); ++i) {
      int r = index_of(elems_[static_cast<std::size_t>(i)].inverse());
      assert(r >= 0 && "closed under inversion");
      inv_[static_cast<std::size_t>(i)] = r;
    }
  }

  void require_subgroup(const std::vector<int>& H, const char* who) const {
    if (!is_subgroup(H)) throw std::invalid_argument(std::string(who) + ": not a subgroup");
  }

  [[nodiscard]] static std::string key_of(const Perm& p) {
    return std::string(reinterpret_cast<const char*>(p.images().data()), p.images().size());
  }

  static constexpr std::size_t kMultTableMaxOrder = 512;

  int degree_ = 1;
  std::vector<Perm> elems_;
  std::unordered_map<std::string, int> index_;
  std::vector<int> inv_;
  std::vector<int> mult_table_;  // empty when order() > kMultTableMaxOrder
};

}  // namespace burnside
