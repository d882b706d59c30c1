#pragma once

// The concrete algebra instances, keyed by name:
//
//   vq           E_{k,l} with [E_{k,l},E_{r,s}] = (q^{rl-sk}-q^{sk-rl})E_{k+r,l+s}
//                + delta_{k,-r} delta_{l,-s} (k c1 + l c2);  E_{0,0} = 0
//   gl-inf       elementary matrices, trace form, the standard 2-cocycle
//   A            G_{a,m} = E_{m+a,m-a} inside gl-inf, with form and cocycle
//   A-star       A + C K1, the central extension of A by its cocycle
//   A-oplus-K1   A + C K1 as a direct sum (K1 split off, no cocycle term)
//   hat-A        loop algebra of A with K2 (level) term
//   hat-A-star   loop algebra of A-star with K2; K1 (x) t^i stays central
//   tilde-A      loop algebra of A with both K1 (cocycle) and K2 terms
//   hat-A-oplus-K1  hat-A + C K1 as a direct sum
//   vq-cov       covariant quotient of hat-A-star presenting vq:
//                [Gbar(a,m),Gbar(b,n)] = (q^{mb-na}-q^{na-mb})Gbar(a+b,m+n)
//                + a d d c1bar + m d d K2   (d d = delta_{a+b,0} delta_{m+n,0})

#include <qdo/algebra.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdo {

inline AlgebraSpec make_vq() {
  AlgebraSpec A;
  A.name = "vq";
  A.member = [](const BasisKey& k) {
    if (std::holds_alternative<EKey>(k)) return true;
    if (const auto* c = std::get_if<Central>(&k))
      return *c == Central::C1 || *c == Central::C2;
    return false;
  };
  A.bracket_rule = [](const BasisKey& a, const BasisKey& b) {
    const auto& x = std::get<EKey>(a);
    const auto& y = std::get<EKey>(b);
    LieElem out;
    QLaurent c = q_pow(y.k * x.l - y.l * x.k) - q_pow(y.l * x.k - y.k * x.l);
    out.add(EKey{x.k + y.k, x.l + y.l}, c);
    if (x.k == -y.k && x.l == -y.l) {
      out.add(Central::C1, QLaurent(x.k));
      out.add(Central::C2, QLaurent(x.l));
    }
    return out;
  };
  return A;
}

inline AlgebraSpec make_glinf() {
  AlgebraSpec A;
  A.name = "gl-inf";
  A.member = [](const BasisKey& k) { return std::holds_alternative<EijKey>(k); };
  A.bracket_rule = [](const BasisKey& a, const BasisKey& b) {
    const auto& x = std::get<EijKey>(a);
    const auto& y = std::get<EijKey>(b);
    LieElem out;
    if (x.n == y.m) out.add(EijKey{x.m, y.n}, QLaurent(1));
    if (y.n == x.m) out.add(EijKey{y.m, x.n}, QLaurent(-1));
    return out;
  };
  A.form_rule = [](const BasisKey& a, const BasisKey& b) {
    const auto& x = std::get<EijKey>(a);
    const auto& y = std::get<EijKey>(b);
    return (x.m == y.n && x.n == y.m) ? QLaurent(1) : QLaurent();
  };
  A.cocycle_rule = [](const BasisKey& a, const BasisKey& b) {
    const auto& x = std::get<EijKey>(a);
    const auto& y = std::get<EijKey>(b);
    if (x.n != y.m || x.m != y.n) return QLaurent();
    if (x.m <= 0 && x.n >= 1) return QLaurent(1);
    if (x.m >= 1 && x.n <= 0) return QLaurent(-1);
    return QLaurent();
  };
  return A;
}

inline LieElem bracket_G(const GKey& x, const GKey& y) {
  LieElem out;
  if (x.alpha + y.alpha == x.m - y.m)
    out.add(GKey{x.alpha + y.alpha, x.alpha + y.m}, QLaurent(1));
  if (x.alpha + y.alpha == y.m - x.m)
    out.add(GKey{x.alpha + y.alpha, y.m - x.alpha}, QLaurent(-1));
  return out;
}

inline QLaurent form_G(const GKey& x, const GKey& y) {
  return (x.alpha + y.alpha == 0 && x.m == y.m) ? QLaurent(1) : QLaurent();
}

inline QLaurent psi_G(const GKey& x, const GKey& y) {
  return (x.alpha + y.alpha == 0 && x.m == y.m) ? QLaurent(x.alpha) : QLaurent();
}

inline AlgebraSpec make_A() {
  AlgebraSpec A;
  A.name = "A";
  A.member = [](const BasisKey& k) { return std::holds_alternative<GKey>(k); };
  A.bracket_rule = [](const BasisKey& a, const BasisKey& b) {
    return bracket_G(std::get<GKey>(a), std::get<GKey>(b));
  };
  A.form_rule = [](const BasisKey& a, const BasisKey& b) {
    return form_G(std::get<GKey>(a), std::get<GKey>(b));
  };
  A.cocycle_rule = [](const BasisKey& a, const BasisKey& b) {
    return psi_G(std::get<GKey>(a), std::get<GKey>(b));
  };
  return A;
}

// A + C K1, either as the central extension through the cocycle (with_psi)
// or as the plain direct sum.
inline AlgebraSpec make_A_plus_K1(bool with_psi, std::string name) {
  AlgebraSpec A;
  A.name = std::move(name);
  A.member = [](const BasisKey& k) {
    if (std::holds_alternative<GKey>(k)) return true;
    if (const auto* c = std::get_if<Central>(&k)) return *c == Central::K1;
    return false;
  };
  A.bracket_rule = [with_psi](const BasisKey& a, const BasisKey& b) {
    const auto* x = std::get_if<GKey>(&a);
    const auto* y = std::get_if<GKey>(&b);
    if (!x || !y) return LieElem();
    LieElem out = bracket_G(*x, *y);
    if (with_psi) out.add(Central::K1, psi_G(*x, *y));
    return out;
  };
  // The form extends by <. , K1> = <K1 , .> = 0.
  A.form_rule = [](const BasisKey& a, const BasisKey& b) {
    const auto* x = std::get_if<GKey>(&a);
    const auto* y = std::get_if<GKey>(&b);
    if (!x || !y) return QLaurent();
    return form_G(*x, *y);
  };
  return A;
}

inline AlgebraSpec make_A_star() { return make_A_plus_K1(true, "A-star"); }
inline AlgebraSpec make_A_oplus_K1() { return make_A_plus_K1(false, "A-oplus-K1"); }

// Loop-algebra builder over a base instance:
//   [a(x)t^i, b(x)t^j] = [a,b](x)t^{i+j}  (+ psi(a,b) delta_{i+j+1,0} K1)
//                                          + i <a,b> delta_{i+j,0} K2.
// Loops of central inner keys are central. `extra_central` admits bare
// central keys beyond K2 (K1 for the tilde flavor and the direct sums).
inline AlgebraSpec make_affinization(const AlgebraSpec& base, bool with_K1_term,
                                     std::vector<Central> extra_central, std::string name) {
  AlgebraSpec A;
  A.name = std::move(name);
  auto base_member = base.member;
  A.member = [base_member, extra_central](const BasisKey& k) {
    if (const auto* l = std::get_if<LoopKey>(&k)) {
      BasisKey inner = std::visit([](const auto& v) -> BasisKey { return v; }, l->inner);
      return base_member(inner);
    }
    if (const auto* c = std::get_if<Central>(&k)) {
      if (*c == Central::K2) return true;
      for (Central e : extra_central)
        if (*c == e) return true;
    }
    return false;
  };
  auto brk = base.bracket_rule;
  auto frm = base.form_rule;
  auto psi = base.cocycle_rule;
  A.bracket_rule = [brk, frm, psi, with_K1_term](const BasisKey& a, const BasisKey& b) {
    if (is_central(a) || is_central(b)) return LieElem();
    const auto& x = std::get<LoopKey>(a);
    const auto& y = std::get<LoopKey>(b);
    BasisKey xi = std::visit([](const auto& v) -> BasisKey { return v; }, x.inner);
    BasisKey yi = std::visit([](const auto& v) -> BasisKey { return v; }, y.inner);
    LieElem out = brk(xi, yi).tensor_t(x.deg + y.deg);
    if (with_K1_term && psi && x.deg + y.deg + 1 == 0)
      out.add(Central::K1, (*psi)(xi, yi));
    if (frm && x.deg + y.deg == 0)
      out.add(Central::K2, QLaurent(x.deg) * (*frm)(xi, yi));
    return out;
  };
  return A;
}

inline AlgebraSpec make_hat_A() {
  AlgebraSpec A = make_affinization(make_A(), false, {}, "hat-A");
  // psi_2(a (x) t^i, b (x) t^j) = psi(a,b) delta_{i+j+1,0}; zero against K2.
  A.cocycle_rule = [](const BasisKey& a, const BasisKey& b) {
    const auto* x = std::get_if<LoopKey>(&a);
    const auto* y = std::get_if<LoopKey>(&b);
    if (!x || !y || x->deg + y->deg + 1 != 0) return QLaurent();
    const auto* xg = std::get_if<GKey>(&x->inner);
    const auto* yg = std::get_if<GKey>(&y->inner);
    if (!xg || !yg) return QLaurent();
    return psi_G(*xg, *yg);
  };
  return A;
}

inline AlgebraSpec make_hat_A_star() {
  return make_affinization(make_A_star(), false, {}, "hat-A-star");
}

inline AlgebraSpec make_tilde_A() {
  return make_affinization(make_A(), true, {Central::K1}, "tilde-A");
}

inline AlgebraSpec make_hat_A_oplus_K1() {
  return make_affinization(make_A(), false, {Central::K1}, "hat-A-oplus-K1");
}

inline AlgebraSpec make_vq_cov() {
  AlgebraSpec A;
  A.name = "vq-cov";
  A.member = [](const BasisKey& k) {
    if (std::holds_alternative<GbarKey>(k)) return true;
    if (const auto* c = std::get_if<Central>(&k))
      return *c == Central::C1Bar || *c == Central::K2;
    return false;
  };
  A.bracket_rule = [](const BasisKey& a, const BasisKey& b) {
    const auto& x = std::get<GbarKey>(a);
    const auto& y = std::get<GbarKey>(b);
    LieElem out;
    long e = x.m * y.alpha - y.m * x.alpha;
    out.add(GbarKey{x.alpha + y.alpha, x.m + y.m}, q_pow(e) - q_pow(-e));
    if (x.alpha + y.alpha == 0 && x.m + y.m == 0) {
      out.add(Central::C1Bar, QLaurent(x.alpha));
      out.add(Central::K2, QLaurent(x.m));
    }
    return out;
  };
  return A;
}

/// Catalogue lookup by name.
inline const AlgebraSpec& algebra(const std::string& name) {
  static const std::map<std::string, AlgebraSpec> reg = [] {
    std::map<std::string, AlgebraSpec> m;
    for (auto&& a : {make_vq(), make_glinf(), make_A(), make_A_star(), make_A_oplus_K1(),
                     make_hat_A(), make_hat_A_star(), make_tilde_A(), make_hat_A_oplus_K1(),
                     make_vq_cov()})
      m.emplace(a.name, a);
    return m;
  }();
  auto it = reg.find(name);
  if (it == reg.end()) throw std::invalid_argument("unknown algebra: " + name);
  return it->second;
}

inline std::vector<std::string> algebra_names() {
  return {"vq",    "gl-inf",     "A",       "A-star",         "A-oplus-K1",
          "hat-A", "hat-A-star", "tilde-A", "hat-A-oplus-K1", "vq-cov"};
}

/// G_{a,m} |-> E_{m+a,m-a}: the defining embedding of A into gl-inf.
inline LieElem embed_A_to_glinf(const LieElem& x) {
  LieElem out;
  for (const auto& [k, c] : x.terms()) {
    const auto& g = std::get<GKey>(k);
    out.add(EijKey{g.m + g.alpha, g.m - g.alpha}, c);
  }
  return out;
}

/// E_{m,n} (m+n even) |-> G_{(m-n)/2, (m+n)/2}: inverse of the embedding.
inline LieElem glinf_to_A(const LieElem& x) {
  LieElem out;
  for (const auto& [k, c] : x.terms()) {
    const auto& e = std::get<EijKey>(k);
    if ((e.m + e.n) % 2 != 0)
      throw std::invalid_argument("key " + key_str(k) + " has odd parity, not in A");
    out.add(GKey{(e.m - e.n) / 2, (e.m + e.n) / 2}, c);
  }
  return out;
}

}  // namespace qdo
