#pragma once

// The covariant quotient of hat-A-star by the Z-action sigma_r (G_{a,m} |->
// G_{a,m+r}) weighted by the character r |-> q^r. Canonical representatives
// are G_{a,0} (x) t^m, written Gbar[a,m]; K1 (x) 1 survives as c1bar and K2
// is kept. The quotient relations are
//
//   G_{a,p} (x) t^m  ==  q^{-pm} Gbar(a,m),     K1 (x) t^m == delta_{m,0} c1bar.
//
// Both the closed-form bracket (the vq-cov instance) and the defining sum
// over the group are implemented; tests cross-check one against the other.

#include <qdo/catalogue.hpp>

#include <set>
#include <stdexcept>

namespace qdo {

/// Canonical form of a hat-A-star element in the covariant quotient.
/// Already-canonical keys (Gbar, c1bar, K2) pass through, so the map is
/// idempotent.
inline LieElem covariant_reduce(const LieElem& x) {
  LieElem out;
  for (const auto& [k, c] : x.terms()) {
    if (const auto* l = std::get_if<LoopKey>(&k)) {
      if (const auto* g = std::get_if<GKey>(&l->inner)) {
        out.add(GbarKey{g->alpha, l->deg}, q_pow(-g->m * l->deg) * c);
        continue;
      }
      if (const auto* cen = std::get_if<Central>(&l->inner);
          cen && *cen == Central::K1) {
        if (l->deg == 0) out.add(Central::C1Bar, c);
        continue;
      }
      throw std::invalid_argument("covariant_reduce: unsupported loop key " + key_str(k));
    }
    if (const auto* cen = std::get_if<Central>(&k)) {
      if (*cen == Central::K2 || *cen == Central::C1Bar) {
        out.add(k, c);
        continue;
      }
      throw std::invalid_argument("covariant_reduce: unsupported central key " + key_str(k));
    }
    if (std::holds_alternative<GbarKey>(k)) {
      out.add(k, c);
      continue;
    }
    throw std::invalid_argument("covariant_reduce: unsupported key " + key_str(k));
  }
  return out;
}

/// Closed-form covariant bracket on canonical elements.
inline LieElem covariant_bracket(const LieElem& x, const LieElem& y) {
  return bracket(algebra("vq-cov"), x, y);
}

/// The defining bracket of the quotient,
///   [abar (x) t^m, bbar (x) t^n] = sum_r q^{mr} ( [sigma_r(a), b] (x) t^{m+n}
///                                  + m <sigma_r(a), b> delta_{m+n,0} K2 )-bar,
/// with a = G_{alpha,0}, b = G_{beta,0} and the bracket taken in A-star.
/// The Kronecker deltas of the A-star structure constants leave at most two
/// contributing values of r, so the sum is exact with no truncation.
inline LieElem covariant_bracket_sum(const LieElem& x, const LieElem& y) {
  const AlgebraSpec& Astar = algebra("A-star");
  LieElem out;
  for (const auto& [kx, cx] : x.terms()) {
    const auto* gx = std::get_if<GbarKey>(&kx);
    if (!gx) continue;  // central keys bracket to zero
    for (const auto& [ky, cy] : y.terms()) {
      const auto* gy = std::get_if<GbarKey>(&ky);
      if (!gy) continue;
      long m = gx->m, n = gy->m;
      std::set<long> rs = {gx->alpha + gy->alpha, -(gx->alpha + gy->alpha), 0};
      LieElem acc;
      for (long r : rs) {
        LieElem sig_a = G(gx->alpha, r);  // sigma_r(G_{alpha,0})
        LieElem b = G(gy->alpha, 0);
        LieElem term = bracket(Astar, sig_a, b).tensor_t(m + n);
        if (m + n == 0)
          term.add(Central::K2, QLaurent(m) * form(Astar, sig_a, b));
        acc += q_pow(m * r) * term;
      }
      out += (cx * cy) * covariant_reduce(acc);
    }
  }
  return out;
}

/// theta: E_{a,m} |-> Gbar(a,m), c1 |-> c1bar, c2 |-> K2. Intertwines the
/// vq bracket with the covariant bracket.
inline LieElem vq_to_covariant(const LieElem& x) {
  LieElem out;
  for (const auto& [k, c] : x.terms()) {
    if (const auto* e = std::get_if<EKey>(&k)) {
      out.add(GbarKey{e->k, e->l}, c);
      continue;
    }
    const auto& cen = std::get<Central>(k);
    if (cen == Central::C1)
      out.add(Central::C1Bar, c);
    else if (cen == Central::C2)
      out.add(Central::K2, c);
    else
      throw std::invalid_argument("vq_to_covariant: unsupported key " + key_str(k));
  }
  return out;
}

}  // namespace qdo
