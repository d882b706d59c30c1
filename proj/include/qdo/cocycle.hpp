#pragma once

// 2-cocycles, trivializing maps, and the splitting isomorphisms of central
// extensions: f  : A-oplus-K1     -> A-star,    (a, t K1) |-> a + (mu(a)+t) K1
//             f2 : hat-A-oplus-K1 -> tilde-A,   via mu2.

#include <qdo/catalogue.hpp>

#include <functional>
#include <string>

namespace qdo {

struct Cocycle {
  std::string algebra;  // home algebra name
  ScalarRule rule;

  QLaurent operator()(const LieElem& x, const LieElem& y) const {
    QLaurent out;
    for (const auto& [kx, cx] : x.terms())
      for (const auto& [ky, cy] : y.terms()) out += cx * cy * rule(kx, ky);
    return out;
  }
};

struct TrivializingMap {
  std::string algebra;
  std::function<QLaurent(const BasisKey&)> mu;

  QLaurent operator()(const LieElem& x) const {
    QLaurent out;
    for (const auto& [k, c] : x.terms()) out += c * mu(k);
    return out;
  }
};

/// The cocycle an instance carries, as a Cocycle value.
inline Cocycle cocycle_of(const std::string& algebra_name) {
  const AlgebraSpec& A = algebra(algebra_name);
  if (!A.cocycle_rule)
    throw std::invalid_argument("algebra " + algebra_name + " has no cocycle");
  return Cocycle{algebra_name, *A.cocycle_rule};
}

/// mu(G_{a,m}) = (1/2) delta_{a,0} m trivializes the cocycle of A.
inline TrivializingMap mu_A() {
  return TrivializingMap{"A", [](const BasisKey& k) {
    const auto* g = std::get_if<GKey>(&k);
    if (!g || g->alpha != 0) return QLaurent();
    return QLaurent(Rational(g->m, 2));
  }};
}

/// mu2(G_{a,m} (x) t^i) = (1/2) delta_{a,0} delta_{i+1,0} m, mu2(K2) = 0:
/// the lift of mu trivializing psi_2 on hat-A.
inline TrivializingMap mu2_hat_A() {
  return TrivializingMap{"hat-A", [](const BasisKey& k) {
    const auto* l = std::get_if<LoopKey>(&k);
    if (!l || l->deg != -1) return QLaurent();
    const auto* g = std::get_if<GKey>(&l->inner);
    if (!g || g->alpha != 0) return QLaurent();
    return QLaurent(Rational(g->m, 2));
  }};
}

/// Skew-symmetry on the pairs of (x,y,z) plus the cyclic cocycle identity
/// psi(x,[y,z]) + psi(y,[z,x]) + psi(z,[x,y]) = 0, all exact.
inline bool check_cocycle(const Cocycle& psi, const LieElem& x, const LieElem& y,
                          const LieElem& z) {
  const AlgebraSpec& A = algebra(psi.algebra);
  if (!(psi(x, y) + psi(y, x)).is_zero()) return false;
  if (!(psi(y, z) + psi(z, y)).is_zero()) return false;
  if (!(psi(z, x) + psi(x, z)).is_zero()) return false;
  QLaurent s = psi(x, bracket(A, y, z)) + psi(y, bracket(A, z, x)) + psi(z, bracket(A, x, y));
  return s.is_zero();
}

/// psi(x,y) == mu([x,y]), the definition of a trivial 2-cocycle.
inline bool check_trivial(const Cocycle& psi, const TrivializingMap& mu, const LieElem& x,
                          const LieElem& y) {
  const AlgebraSpec& A = algebra(psi.algebra);
  return psi(x, y) == mu(bracket(A, x, y));
}

/// The splitting map of a trivialized central extension. Forward sends the
/// direct sum to the extension, a + t K1 |-> a + (mu(a)+t) K1; inverse
/// subtracts mu(a) back off. Both directions act on the shared key space.
inline LieElem extension_iso(const TrivializingMap& mu, const LieElem& x, bool inverse = false) {
  QLaurent shift = mu(x);
  LieElem out = x;
  out.add(Central::K1, inverse ? -shift : shift);
  return out;
}

}  // namespace qdo
