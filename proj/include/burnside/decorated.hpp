#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "burnside/ring.hpp"

namespace burnside {

/// Concrete decorated G-set: an explicit action table plus one frill per
/// point. Point frills live on the class representative of the stabilizer,
/// transported along a fixed minimal conjugator per point; every comparison
/// routes through those identifications.
class DecoratedGSet {
 public:
  explicit DecoratedGSet(const BurnsideRing& ring) : ring_(&ring), action_(ring.group().order()) {}

  [[nodiscard]] const BurnsideRing& ring() const { return *ring_; }
  [[nodiscard]] int n_points() const { return static_cast<int>(stab_class_.size()); }
  [[nodiscard]] int act(int g, int x) const { return action_[static_cast<std::size_t>(g)][static_cast<std::size_t>(x)]; }
  [[nodiscard]] int stabilizer_class(int x) const { return stab_class_[static_cast<std::size_t>(x)]; }
  [[nodiscard]] int conjugator(int x) const { return conj_[static_cast<std::size_t>(x)]; }
  [[nodiscard]] int frill(int x) const { return frill_[static_cast<std::size_t>(x)]; }

  void add_point(int stab_class, int conjugator, int frill) {
    stab_class_.push_back(stab_class);
    conj_.push_back(conjugator);
    frill_.push_back(frill);
  }

  void set_action(int g, std::vector<int> images) { action_[static_cast<std::size_t>(g)] = std::move(images); }

  void set_frill(int x, int v) { frill_[static_cast<std::size_t>(x)] = v; }

  /// Action axioms (composition checked against a generating set, which
  /// settles every product by induction) and frill equivariance over every
  /// pair (g, x).
  [[nodiscard]] std::vector<std::string> validate() const {
    std::vector<std::string> out;
    const FiniteGroup& G = ring_->group();
    const DecorationFunctor& fun = ring_->functor();
    const int n = n_points();
    const int ord = static_cast<int>(G.order());
    for (int x = 0; x < n; ++x)
      if (act(G.identity_index(), x) != x) {
        out.push_back("identity moves a point");
        return out;
      }
    std::vector<int> gens;
    std::vector<char> in = G.membership(G.closure(gens));
    for (int g = 0; g < ord; ++g)
      if (!in[static_cast<std::size_t>(g)]) {
        gens.push_back(g);
        in = G.membership(G.closure(gens));
      }
    bool comp_bad = false;
    for (int s : gens)
      for (int h = 0; h < ord && !comp_bad; ++h) {
        const int sh = G.mult(s, h);
        for (int x = 0; x < n; ++x)
          if (act(sh, x) != act(s, act(h, x))) {
            comp_bad = true;
            break;
          }
      }
    if (comp_bad) out.push_back("action is not compatible with composition");
    bool stab_bad = false, equi_bad = false;
    for (int g = 0; g < ord; ++g)
      for (int x = 0; x < n; ++x) {
        const int gx = act(g, x);
        if (stab_class_[static_cast<std::size_t>(x)] != stab_class_[static_cast<std::size_t>(gx)]) {
          stab_bad = true;
          continue;
        }
        const int c = stab_class_[static_cast<std::size_t>(x)];
        // z = c_x^-1 g^-1 c_gx normalizes the representative exactly when
        // the recorded stabilizers are compatible with the action
        const int z = G.mult(G.inv(conj_[static_cast<std::size_t>(x)]),
                             G.mult(G.inv(g), conj_[static_cast<std::size_t>(gx)]));
        try {
          if (fun.act(c, z, frill_[static_cast<std::size_t>(x)]) != frill_[static_cast<std::size_t>(gx)])
            equi_bad = true;
        } catch (const std::invalid_argument&) {
          stab_bad = true;
        }
      }
    if (stab_bad) out.push_back("recorded stabilizers do not match the action");
    if (equi_bad) out.push_back("frills are not equivariant");
    return out;
  }

  [[nodiscard]] nlohmann::json to_json() const {
    const FiniteGroup& G = ring_->group();
    nlohmann::json pts = nlohmann::json::array();
    for (int x = 0; x < n_points(); ++x)
      pts.push_back({{"stabilizer", ring_->classification().cls(stabilizer_class(x)).label},
                     {"conjugator", G.elem(conjugator(x)).to_cycles()},
                     {"frill", ring_->functor().value(stabilizer_class(x)).element_key(frill(x))}});
    return {{"n_points", n_points()}, {"points", pts}};
  }

 private:
  const BurnsideRing* ring_;
  std::vector<std::vector<int>> action_;
  std::vector<int> stab_class_, conj_, frill_;
};

/// Coset space G/A for a canonical basis element, frills transported from
/// the defining frill along the coset representatives.
[[nodiscard]] inline DecoratedGSet from_basis(const BurnsideRing& R, const BasisElement& b) {
  const FiniteGroup& G = R.group();
  const DecorationFunctor& fun = R.functor();
  const auto& A = R.classification().cls(b.class_id).rep;
  const int n = static_cast<int>(G.order());

  std::vector<int> coset_of(static_cast<std::size_t>(n), -1);
  std::vector<int> reps;
  for (int g = 0; g < n; ++g) {
    if (coset_of[static_cast<std::size_t>(g)] >= 0) continue;
    const int p = static_cast<int>(reps.size());
    for (int a : A.elems) coset_of[static_cast<std::size_t>(G.mult(g, a))] = p;
    reps.push_back(g);
  }

  DecoratedGSet X(R);
  for (int g : reps) {
    std::vector<int> stab;
    for (int a : A.elems) stab.push_back(G.conj(g, a));
    std::sort(stab.begin(), stab.end());
    const auto [c, w] = R.classification().locate(stab);
    const int z = G.mult(G.inv(g), w);
    X.add_point(c, w, fun.act(b.class_id, z, b.frill));
  }
  for (int h = 0; h < n; ++h) {
    std::vector<int> images(reps.size());
    for (std::size_t p = 0; p < reps.size(); ++p)
      images[p] = coset_of[static_cast<std::size_t>(G.mult(h, reps[p]))];
    X.set_action(h, std::move(images));
  }
  return X;
}

[[nodiscard]] inline DecoratedGSet from_basis(const BurnsideRing& R, const std::string& label) {
  return from_basis(R, R.basis(R.find_label(label)));
}

[[nodiscard]] inline DecoratedGSet disjoint_union(const DecoratedGSet& X, const DecoratedGSet& Y) {
  if (&X.ring() != &Y.ring()) throw std::invalid_argument("disjoint_union: sets live over different rings");
  const BurnsideRing& R = X.ring();
  const int n = static_cast<int>(R.group().order());
  DecoratedGSet out(R);
  for (int x = 0; x < X.n_points(); ++x) out.add_point(X.stabilizer_class(x), X.conjugator(x), X.frill(x));
  for (int y = 0; y < Y.n_points(); ++y) out.add_point(Y.stabilizer_class(y), Y.conjugator(y), Y.frill(y));
  for (int g = 0; g < n; ++g) {
    std::vector<int> images;
    images.reserve(static_cast<std::size_t>(X.n_points() + Y.n_points()));
    for (int x = 0; x < X.n_points(); ++x) images.push_back(X.act(g, x));
    for (int y = 0; y < Y.n_points(); ++y) images.push_back(X.n_points() + Y.act(g, y));
    out.set_action(g, std::move(images));
  }
  return out;
}

/// Cartesian product with the diagonal action; the frill at (x, y) is the
/// sum of both frills restricted to the stabilizer intersection.
[[nodiscard]] inline DecoratedGSet product_concrete(const DecoratedGSet& X, const DecoratedGSet& Y) {
  if (&X.ring() != &Y.ring()) throw std::invalid_argument("product_concrete: sets live over different rings");
  const BurnsideRing& R = X.ring();
  const FiniteGroup& G = R.group();
  const DecorationFunctor& fun = R.functor();
  const int n = static_cast<int>(G.order());
  const int ny = Y.n_points();

  DecoratedGSet out(R);
  for (int x = 0; x < X.n_points(); ++x) {
    // stabilizer of x as a bitmap: w R w^-1 with w the point conjugator
    std::vector<char> in_x(static_cast<std::size_t>(n), 0);
    for (int a : R.classification().cls(X.stabilizer_class(x)).rep.elems)
      in_x[static_cast<std::size_t>(G.conj(X.conjugator(x), a))] = 1;
    for (int y = 0; y < ny; ++y) {
      std::vector<int> inter;
      for (int b : R.classification().cls(Y.stabilizer_class(y)).rep.elems) {
        const int e = G.conj(Y.conjugator(y), b);
        if (in_x[static_cast<std::size_t>(e)]) inter.push_back(e);
      }
      std::sort(inter.begin(), inter.end());
      const auto [c, w] = R.classification().locate(inter);
      const int vx = fun.pullback(G.mult(G.inv(X.conjugator(x)), w), c, X.stabilizer_class(x), X.frill(x));
      const int vy = fun.pullback(G.mult(G.inv(Y.conjugator(y)), w), c, Y.stabilizer_class(y), Y.frill(y));
      out.add_point(c, w, fun.value(c).add(vx, vy));
    }
  }
  for (int g = 0; g < n; ++g) {
    std::vector<int> images(static_cast<std::size_t>(X.n_points() * ny));
    for (int x = 0; x < X.n_points(); ++x)
      for (int y = 0; y < ny; ++y)
        images[static_cast<std::size_t>(x * ny + y)] = X.act(g, x) * ny + Y.act(g, y);
    out.set_action(g, std::move(images));
  }
  return out;
}

[[nodiscard]] inline DecoratedGSet dual_concrete(const DecoratedGSet& X) {
  const BurnsideRing& R = X.ring();
  DecoratedGSet out(R);
  for (int x = 0; x < X.n_points(); ++x)
    out.add_point(X.stabilizer_class(x), X.conjugator(x),
                  R.functor().value(X.stabilizer_class(x)).neg(X.frill(x)));
  for (int g = 0; g < static_cast<int>(R.group().order()); ++g) {
    std::vector<int> images(static_cast<std::size_t>(X.n_points()));
    for (int x = 0; x < X.n_points(); ++x) images[static_cast<std::size_t>(x)] = X.act(g, x);
    out.set_action(g, std::move(images));
  }
  return out;
}

/// Orbit decomposition into canonical basis elements. Refuses sets whose
/// frills fail the equivariance axioms.
[[nodiscard]] inline RingElement decompose(const DecoratedGSet& X) {
  const auto violations = X.validate();
  if (!violations.empty()) throw std::invalid_argument("decompose: " + violations.front());
  const BurnsideRing& R = X.ring();
  const int n = static_cast<int>(R.group().order());
  RingElement out;
  std::vector<char> seen(static_cast<std::size_t>(X.n_points()), 0);
  for (int x = 0; x < X.n_points(); ++x) {
    if (seen[static_cast<std::size_t>(x)]) continue;
    for (int g = 0; g < n; ++g) seen[static_cast<std::size_t>(X.act(g, x))] = 1;
    out[R.basis_index(X.stabilizer_class(x), X.frill(x))] += 1;
  }
  return out;
}

}  // namespace burnside
