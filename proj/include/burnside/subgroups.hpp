#pragma once

#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "burnside/group.hpp"

namespace burnside {

// ==== Subgroup ====

/// A subgroup of an ambient FiniteGroup, held as sorted element indices.
struct Subgroup {
  std::vector<int> elems;

  [[nodiscard]] std::size_t order() const { return elems.size(); }
  [[nodiscard]] bool operator==(const Subgroup& o) const { return elems == o.elems; }
  [[nodiscard]] bool operator<(const Subgroup& o) const {
    if (elems.size() != o.elems.size()) return elems.size() < o.elems.size();
    return elems < o.elems;
  }
};

/// All subgroups, each exactly once, ordered by (order, element tuple).
/// Seeds with the cyclic subgroups and repeatedly closes {<H, g>}: every
/// subgroup K is <H, g> for any maximal H < K, so the fixpoint is complete.
[[nodiscard]] inline std::vector<Subgroup> all_subgroups(const FiniteGroup& G) {
  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> work;
  for (int g = 0; g < static_cast<int>(G.order()); ++g) {
    std::vector<int> cyc = G.closure({g});
    if (found.insert(cyc).second) work.push_back(std::move(cyc));
  }
  for (std::size_t w = 0; w < work.size(); ++w) {
    std::vector<int> H = work[w];  // copy: work reallocates while growing
    std::vector<char> in_h = G.membership(H);
    for (int g = 0; g < static_cast<int>(G.order()); ++g) {
      if (in_h[g]) continue;
      std::vector<int> seed = H;
      seed.push_back(g);
      std::vector<int> K = G.closure(seed);
      if (found.insert(K).second) work.push_back(std::move(K));
    }
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (const auto& e : found) out.push_back(Subgroup{e});
  std::sort(out.begin(), out.end());
  return out;
}

// ==== Classification ====

/// One conjugacy class of subgroups: canonical representative (minimal
/// element tuple), its label, and all members.
struct SubgroupClass {
  std::string label;
  Subgroup rep;
  std::vector<Subgroup> members;

  [[nodiscard]] std::size_t class_size() const { return members.size(); }
};

namespace detail {

/// Label by order and element cycle structure, following the naming used by
/// the reference tables: C_n single cycle, K1/K2 the two Klein types, H_n the
/// nonstandard groups of order n, D8/D10 dihedral.
[[nodiscard]] inline std::string class_label_rule(const FiniteGroup& G, const Subgroup& H) {
  auto has_moved_type = [&](std::initializer_list<int> type) {
    std::vector<int> want(type);
    for (int e : H.elems)
      if (G.elem(e).moved_cycle_lengths() == want) return true;
    return false;
  };
  auto is_cyclic = [&] {
    for (int e : H.elems)
      if (G.closure({e}).size() == H.order()) return true;
    return false;
  };
  auto max_elem_order = [&] {
    int m = 1;
    for (int e : H.elems) m = std::max(m, G.elem(e).order());
    return m;
  };
  switch (H.order()) {
    case 1: return "1";
    case 2: return has_moved_type({2}) ? "C2" : "H2";
    case 3: return "C3";
    case 4:
      if (is_cyclic()) return "C4";
      return has_moved_type({2}) ? "K1" : "K2";
    case 5: return "C5";
    case 6:
      if (is_cyclic()) return "C3xC2";
      return has_moved_type({2}) ? "S3" : "H6";
    case 8: return "D8";
    case 10: return "D10";
    case 12: return max_elem_order() == 6 ? "S3xC2" : "A4";
    case 20: return "H20";
    case 24: return "S4";
    case 60: return "A5";
    case 120: return "S5";
    default: return "G" + std::to_string(H.order());
  }
}

inline const std::vector<std::string>& table_order_s4() {
  static const std::vector<std::string> order{"1", "H2", "C2", "C3", "C4", "S3", "K1", "K2", "D8", "A4", "S4"};
  return order;
}

inline const std::vector<std::string>& table_order_s5() {
  static const std::vector<std::string> order{"1",  "H2", "C2",  "C3", "C4", "C5",    "S3", "H6", "C3xC2", "D10",
                                              "K1", "K2", "H20", "D8", "A4", "S3xC2", "S4", "A5", "S5"};
  return order;
}

}  // namespace detail

/// Conjugacy classification of the full subgroup list, with stable class
/// order and a locator from any subgroup to (class, conjugator).
class SubgroupClassification {
 public:
  [[nodiscard]] static SubgroupClassification classify(const FiniteGroup& G, const std::vector<Subgroup>& subgroups) {
    SubgroupClassification c(G);

    std::map<std::vector<int>, int> class_of;  // rep elems -> class id, discovery order
    std::vector<SubgroupClass> classes;
    for (const Subgroup& H : subgroups) {
      std::set<std::vector<int>> orbit;
      for (int g = 0; g < static_cast<int>(G.order()); ++g) {
        std::vector<int> img;
        img.reserve(H.order());
        for (int h : H.elems) img.push_back(G.conj(g, h));
        std::sort(img.begin(), img.end());
        orbit.insert(std::move(img));
      }
      std::vector<int> rep = *orbit.begin();  // minimal tuple in the orbit
      auto [it, fresh] = class_of.try_emplace(rep, static_cast<int>(classes.size()));
      if (fresh) {
        SubgroupClass cls;
        cls.rep = Subgroup{rep};
        for (const auto& m : orbit) cls.members.push_back(Subgroup{m});
        classes.push_back(std::move(cls));
      }
    }

    for (auto& cls : classes) cls.label = detail::class_label_rule(G, cls.rep);
    disambiguate_labels(classes);
    sort_classes(classes);

    c.classes_ = std::move(classes);
    c.build_locator();
    c.build_inclusion();
    return c;
  }

  [[nodiscard]] const FiniteGroup& group() const { return *G_; }
  [[nodiscard]] int n_classes() const { return static_cast<int>(classes_.size()); }
  [[nodiscard]] const SubgroupClass& cls(int i) const { return classes_[static_cast<std::size_t>(i)]; }

  [[nodiscard]] int find_label(const std::string& label) const {
    for (int i = 0; i < n_classes(); ++i)
      if (classes_[static_cast<std::size_t>(i)].label == label) return i;
    throw std::invalid_argument("no subgroup class labeled " + label);
  }

  /// (class id, conjugator g) for a subgroup H given as sorted indices, with
  /// g * rep * g^-1 = H and g minimal in canonical order.
  [[nodiscard]] std::pair<int, int> locate(const std::vector<int>& elems) const {
    auto it = locator_.find(elems);
    if (it == locator_.end()) throw std::invalid_argument("locate: not a subgroup of the classified lattice");
    return it->second;
  }

  /// Whether some conjugate of class a's representative lies inside class b's.
  [[nodiscard]] bool includes(int a, int b) const {
    return includes_[static_cast<std::size_t>(a) * classes_.size() + static_cast<std::size_t>(b)];
  }

  [[nodiscard]] std::string to_json() const {
    std::ostringstream os;
    os << "{\"degree\":" << G_->degree() << ",\"classes\":[";
    for (int i = 0; i < n_classes(); ++i) {
      const SubgroupClass& c = classes_[static_cast<std::size_t>(i)];
      if (i) os << ',';
      os << "{\"label\":\"" << c.label << "\",\"order\":" << c.rep.order() << ",\"class_size\":" << c.class_size()
         << ",\"generators\":[";
      std::vector<int> gens = generating_set(c.rep);
      for (std::size_t k = 0; k < gens.size(); ++k) {
        if (k) os << ',';
        os << '"' << G_->elem(gens[k]).to_cycles() << '"';
      }
      os << "]}";
    }
    os << "]}";
    return os.str();
  }

  /// Greedy minimal-ish generating set in canonical order, deterministic.
  [[nodiscard]] std::vector<int> generating_set(const Subgroup& H) const {
    std::vector<int> gens;
    std::vector<int> span{G_->identity_index()};
    while (span.size() < H.order()) {
      for (int e : H.elems)
        if (!std::binary_search(span.begin(), span.end(), e)) {
          gens.push_back(e);
          break;
        }
      span = G_->closure(gens);
    }
    return gens;
  }

 private:
  explicit SubgroupClassification(const FiniteGroup& G) : G_(&G) {}

  static void disambiguate_labels(std::vector<SubgroupClass>& classes) {
    std::map<std::string, int> seen;
    for (auto& c : classes) seen[c.label]++;
    std::map<std::string, int> counter;
    for (auto& c : classes) {
      if (seen[c.label] == 1) continue;
      c.label += "_" + std::to_string(++counter[c.label]);
    }
  }

  /// Builtin table row order when the label set matches S4 or S5 exactly;
  /// otherwise (order, representative tuple).
  static void sort_classes(std::vector<SubgroupClass>& classes) {
    auto matches = [&](const std::vector<std::string>& want) {
      if (classes.size() != want.size()) return false;
      std::set<std::string> have;
      for (const auto& c : classes) have.insert(c.label);
      return have == std::set<std::string>(want.begin(), want.end());
    };
    const std::vector<std::string>* fixed = nullptr;
    if (matches(detail::table_order_s4())) fixed = &detail::table_order_s4();
    if (matches(detail::table_order_s5())) fixed = &detail::table_order_s5();
    std::sort(classes.begin(), classes.end(), [&](const SubgroupClass& a, const SubgroupClass& b) {
      if (fixed) {
        auto pos = [&](const std::string& l) {
          return std::find(fixed->begin(), fixed->end(), l) - fixed->begin();
        };
        return pos(a.label) < pos(b.label);
      }
      return a.rep < b.rep;
    });
  }

  void build_locator() {
    for (int i = 0; i < n_classes(); ++i) {
      const Subgroup& rep = classes_[static_cast<std::size_t>(i)].rep;
      for (int g = 0; g < static_cast<int>(G_->order()); ++g) {
        std::vector<int> img;
        img.reserve(rep.order());
        for (int h : rep.elems) img.push_back(G_->conj(g, h));
        std::sort(img.begin(), img.end());
        locator_.try_emplace(std::move(img), std::make_pair(i, g));  // first g is canonical-minimal
      }
    }
  }

  void build_inclusion() {
    std::size_t n = classes_.size();
    includes_.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        std::vector<char> in_b = G_->membership(classes_[b].rep.elems);
        bool inc = false;
        for (const Subgroup& m : classes_[a].members) {
          bool inside = true;
          for (int e : m.elems)
            if (!in_b[e]) { inside = false; break; }
          if (inside) { inc = true; break; }
        }
        includes_[a * n + b] = inc ? 1 : 0;
      }
  }

  const FiniteGroup* G_;
  std::vector<SubgroupClass> classes_;
  std::map<std::vector<int>, std::pair<int, int>> locator_;
  std::vector<char> includes_;
};

// ==== Double cosets ====

/// Canonical representatives of A\G/B: the minimal element of each double
/// coset, in increasing order. Union of the cosets is G, pairwise disjoint.
[[nodiscard]] inline std::vector<int> double_cosets(const FiniteGroup& G, const Subgroup& A, const Subgroup& B) {
  std::vector<char> seen(G.order(), 0);
  std::vector<int> reps;
  for (int g = 0; g < static_cast<int>(G.order()); ++g) {
    if (seen[g]) continue;
    reps.push_back(g);
    for (int a : A.elems) {
      int ag = G.mult(a, g);
      for (int b : B.elems) seen[G.mult(ag, b)] = 1;
    }
  }
  return reps;
}

/// Some g with g A g^-1 = B, minimal in canonical order, if A ~ B.
[[nodiscard]] inline std::optional<Perm> conjugating_element(const FiniteGroup& G, const Subgroup& A,
                                                             const Subgroup& B) {
  if (A.order() != B.order()) return std::nullopt;
  std::vector<char> in_b = G.membership(B.elems);
  for (int g = 0; g < static_cast<int>(G.order()); ++g) {
    bool ok = true;
    for (int a : A.elems)
      if (!in_b[G.conj(g, a)]) { ok = false; break; }
    if (ok) return G.elem(g);
  }
  return std::nullopt;
}

}  // namespace burnside
