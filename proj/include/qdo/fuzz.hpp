#pragma once

// Seeded property drivers shared by the CLI and the acceptance suite.
// Sampling uses mt19937_64 raw draws (the engine's output sequence is
// pinned by the standard) with modulo reduction, so a fixed seed gives the
// same tuples on every platform and reports are byte-reproducible.

#include <qdo/cocycle.hpp>
#include <qdo/covariant.hpp>
#include <qdo/fdist.hpp>
#include <qdo/jsonio.hpp>
#include <qdo/pbw.hpp>
#include <qdo/stateio.hpp>

#include <random>
#include <string>
#include <vector>

namespace qdo {

class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}
  uint64_t raw() { return eng_(); }
  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(raw() % static_cast<uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 eng_;
};

/// Uniform basis key of an instance with indices in [-window, window];
/// central keys show up with small probability where they exist.
inline BasisKey sample_key(const std::string& name, long window, Rng& rng) {
  auto idx = [&] { return rng.range(-window, window); };
  if (name == "vq") {
    if (rng.range(0, 9) == 0) return rng.range(0, 1) ? BasisKey(Central::C1) : BasisKey(Central::C2);
    long k = idx(), l = idx();
    if (k == 0 && l == 0) k = 1;
    return EKey{k, l};
  }
  if (name == "gl-inf") return EijKey{idx(), idx()};
  if (name == "A") return GKey{idx(), idx()};
  if (name == "A-star" || name == "A-oplus-K1") {
    if (rng.range(0, 9) == 0) return Central::K1;
    return GKey{idx(), idx()};
  }
  if (name == "hat-A" || name == "hat-A-star" || name == "tilde-A" ||
      name == "hat-A-oplus-K1") {
    long roll = rng.range(0, 9);
    if (roll == 0) return Central::K2;
    if (roll == 1) {
      if (name == "tilde-A" || name == "hat-A-oplus-K1") return Central::K1;
      if (name == "hat-A-star") return loop(Central::K1, idx());
    }
    return loop(GKey{idx(), idx()}, idx());
  }
  if (name == "vq-cov") {
    if (rng.range(0, 9) == 0)
      return rng.range(0, 1) ? BasisKey(Central::C1Bar) : BasisKey(Central::K2);
    return GbarKey{idx(), idx()};
  }
  throw std::invalid_argument("sample_key: no sampler for algebra " + name);
}

/// Random creation key for an induction spec.
inline BasisKey sample_creation(const InductionSpec& S, long window, long max_step, Rng& rng) {
  if (S.algebra.name == "vq") {
    long k = rng.range(-window, window);
    return EKey{k, -rng.range(1, max_step)};
  }
  return loop(GKey{rng.range(-window, window), rng.range(-window, window)},
              -rng.range(1, max_step));
}

inline PBWState sample_state(const InductionSpec& S, long max_depth, long window, Rng& rng) {
  PBWState w = PBWState::bottom_vector(
      S.bottom.dim > 1 ? static_cast<int>(rng.range(0, S.bottom.dim - 1)) : 0);
  long budget = rng.range(0, max_depth);
  while (budget > 0) {
    long step = rng.range(1, budget);
    w = act(S, basis(sample_creation(S, window, step, rng)), w);
    budget -= step;
  }
  return w;
}

struct CheckReport {
  std::string target;
  Json params;  // algebra, window, trials, seed, ...
  long checked = 0;
  long failures = 0;
  Json first_counterexample;

  bool ok() const { return failures == 0; }
  Json to_json() const {
    Json j{{"target", target},
           {"params", params},
           {"checked", checked},
           {"failures", failures}};
    j["first_counterexample"] = first_counterexample.is_null() ? Json() : first_counterexample;
    return j;
  }
  void fail(Json witness) {
    ++failures;
    if (first_counterexample.is_null()) first_counterexample = std::move(witness);
  }
};

// ---- randomized fuzz targets ---------------------------------------------

inline CheckReport fuzz_jacobi(const std::string& alg, long window, long trials,
                               uint64_t seed) {
  const AlgebraSpec& A = algebra(alg);
  Rng rng(seed);
  CheckReport rep;
  rep.target = "jacobi";
  rep.params = Json{{"algebra", alg}, {"window", window}, {"trials", trials}, {"seed", seed}};
  for (long i = 0; i < trials; ++i) {
    LieElem x = basis(sample_key(alg, window, rng));
    LieElem y = basis(sample_key(alg, window, rng));
    LieElem z = basis(sample_key(alg, window, rng));
    ++rep.checked;
    if (!check_antisymmetry(A, x, y) || !check_jacobi(A, x, y, z))
      rep.fail(Json{{"x", elem_str(x)}, {"y", elem_str(y)}, {"z", elem_str(z)}});
  }
  return rep;
}

inline CheckReport fuzz_cocycle(const std::string& alg, long window, long trials,
                                uint64_t seed) {
  Cocycle psi = cocycle_of(alg);
  Rng rng(seed);
  CheckReport rep;
  rep.target = "cocycle";
  rep.params = Json{{"algebra", alg}, {"window", window}, {"trials", trials}, {"seed", seed}};
  for (long i = 0; i < trials; ++i) {
    LieElem x = basis(sample_key(alg, window, rng));
    LieElem y = basis(sample_key(alg, window, rng));
    LieElem z = basis(sample_key(alg, window, rng));
    ++rep.checked;
    if (!check_cocycle(psi, x, y, z))
      rep.fail(Json{{"x", elem_str(x)}, {"y", elem_str(y)}, {"z", elem_str(z)}});
  }
  return rep;
}

inline CheckReport fuzz_trivial(const std::string& alg, long window, long trials,
                                uint64_t seed) {
  if (alg != "A" && alg != "hat-A")
    throw std::invalid_argument("trivializing maps are registered for A and hat-A");
  Cocycle psi = cocycle_of(alg);
  TrivializingMap mu = alg == "A" ? mu_A() : mu2_hat_A();
  Rng rng(seed);
  CheckReport rep;
  rep.target = "trivial";
  rep.params = Json{{"algebra", alg}, {"window", window}, {"trials", trials}, {"seed", seed}};
  for (long i = 0; i < trials; ++i) {
    LieElem x = basis(sample_key(alg, window, rng));
    LieElem y = basis(sample_key(alg, window, rng));
    ++rep.checked;
    if (!check_trivial(psi, mu, x, y))
      rep.fail(Json{{"x", elem_str(x)}, {"y", elem_str(y)}});
  }
  return rep;
}

inline CheckReport fuzz_invariance(const std::string& alg, long window, long trials,
                                   uint64_t seed) {
  const AlgebraSpec& A = algebra(alg);
  Rng rng(seed);
  CheckReport rep;
  rep.target = "invariance";
  rep.params = Json{{"algebra", alg}, {"window", window}, {"trials", trials}, {"seed", seed}};
  for (long i = 0; i < trials; ++i) {
    LieElem x = basis(sample_key(alg, window, rng));
    LieElem y = basis(sample_key(alg, window, rng));
    LieElem z = basis(sample_key(alg, window, rng));
    ++rep.checked;
    if (!check_form_symmetry(A, x, y) || !check_invariance(A, x, y, z))
      rep.fail(Json{{"x", elem_str(x)}, {"y", elem_str(y)}, {"z", elem_str(z)}});
  }
  return rep;
}

inline CheckReport fuzz_iso_theta(long window, long trials, uint64_t seed) {
  const AlgebraSpec& VQ = algebra("vq");
  Rng rng(seed);
  CheckReport rep;
  rep.target = "iso";
  rep.params = Json{{"algebra", "vq"}, {"window", window}, {"trials", trials}, {"seed", seed}};
  for (long i = 0; i < trials; ++i) {
    LieElem x = basis(sample_key("vq", window, rng));
    LieElem y = basis(sample_key("vq", window, rng));
    ++rep.checked;
    LieElem tx = vq_to_covariant(x), ty = vq_to_covariant(y);
    bool ok = vq_to_covariant(bracket(VQ, x, y)) == covariant_bracket(tx, ty) &&
              covariant_bracket_sum(tx, ty) == covariant_bracket(tx, ty);
    if (!ok) rep.fail(Json{{"x", elem_str(x)}, {"y", elem_str(y)}});
  }
  return rep;
}

inline CheckReport fuzz_module_axiom(const InductionSpec& S, long window, long trials,
                                     uint64_t seed, long max_depth = 5) {
  Rng rng(seed);
  CheckReport rep;
  rep.target = "module-axiom";
  rep.params = Json{{"algebra", S.algebra.name}, {"kind", S.kind}, {"window", window},
                    {"trials", trials},          {"seed", seed}};
  for (long i = 0; i < trials; ++i) {
    LieElem x = basis(sample_key(S.algebra.name, window, rng));
    LieElem y = basis(sample_key(S.algebra.name, window, rng));
    PBWState w = sample_state(S, max_depth, window, rng);
    ++rep.checked;
    if (!check_module_axiom(S, x, y, w))
      rep.fail(Json{{"x", elem_str(x)}, {"y", elem_str(y)}, {"w", state_str(S, w)}});
  }
  return rep;
}

inline CheckReport run_fuzz(const std::string& target, const std::string& alg, long window,
                            long trials, uint64_t seed) {
  if (target == "jacobi") return fuzz_jacobi(alg, window, trials, seed);
  if (target == "cocycle") return fuzz_cocycle(alg, window, trials, seed);
  if (target == "trivial") return fuzz_trivial(alg, window, trials, seed);
  if (target == "invariance") return fuzz_invariance(alg, window, trials, seed);
  if (target == "iso") return fuzz_iso_theta(window, trials, seed);
  if (target == "module-axiom") {
    if (alg == "vq") return fuzz_module_axiom(make_verma(QLaurent(0), QLaurent(1)), window, trials, seed);
    if (alg == "tilde-A")
      return fuzz_module_axiom(make_vacuum("tilde-A", QLaurent(1), QLaurent(1)), window,
                               trials, seed);
    throw std::invalid_argument("module-axiom fuzzing defaults exist for vq and tilde-A; "
                                "pass a spec file instead");
  }
  throw std::invalid_argument("unknown fuzz target: " + target);
}

// ---- deterministic verifications -----------------------------------------

/// theta on every basis pair with indices in [-window, window], plus the
/// defining sum against the closed form on the same pairs.
inline CheckReport verify_theta(long window) {
  const AlgebraSpec& VQ = algebra("vq");
  CheckReport rep;
  rep.target = "theta";
  rep.params = Json{{"window", window}};
  for (long a = -window; a <= window; ++a)
    for (long m = -window; m <= window; ++m)
      for (long b = -window; b <= window; ++b)
        for (long n = -window; n <= window; ++n) {
          LieElem x = E(a, m), y = E(b, n);
          LieElem tx = vq_to_covariant(x), ty = vq_to_covariant(y);
          LieElem closed = covariant_bracket(tx, ty);
          ++rep.checked;
          if (vq_to_covariant(bracket(VQ, x, y)) != closed ||
              covariant_bracket_sum(tx, ty) != closed)
            rep.fail(Json{{"x", elem_str(x)}, {"y", elem_str(y)}});
        }
  return rep;
}

/// f and f2 preserve brackets and round-trip with their inverses.
inline CheckReport verify_ext_iso(long trials, uint64_t seed) {
  TrivializingMap mu = mu_A();
  TrivializingMap mu2 = mu2_hat_A();
  const AlgebraSpec& dsum = algebra("A-oplus-K1");
  const AlgebraSpec& star = algebra("A-star");
  const AlgebraSpec& dsum2 = algebra("hat-A-oplus-K1");
  const AlgebraSpec& tilde = algebra("tilde-A");
  Rng rng(seed);
  CheckReport rep;
  rep.target = "ext-iso";
  rep.params = Json{{"trials", trials}, {"seed", seed}};
  for (long i = 0; i < trials; ++i) {
    LieElem u = basis(sample_key("A-oplus-K1", 4, rng));
    LieElem v = basis(sample_key("A-oplus-K1", 4, rng));
    ++rep.checked;
    bool ok = extension_iso(mu, bracket(dsum, u, v)) ==
                  bracket(star, extension_iso(mu, u), extension_iso(mu, v)) &&
              extension_iso(mu, extension_iso(mu, u), true) == u;
    LieElem p = basis(sample_key("hat-A-oplus-K1", 3, rng));
    LieElem w = basis(sample_key("hat-A-oplus-K1", 3, rng));
    ok = ok &&
         extension_iso(mu2, bracket(dsum2, p, w)) ==
             bracket(tilde, extension_iso(mu2, p), extension_iso(mu2, w)) &&
         extension_iso(mu2, extension_iso(mu2, p), true) == p;
    if (!ok) rep.fail(Json{{"u", elem_str(u)}, {"v", elem_str(v)}, {"p", elem_str(p)}});
  }
  return rep;
}

/// Support containment sweep of the induced-module simplicity argument.
inline CheckReport verify_support(long k_window, long j1_max, long i1_max,
                                  const std::vector<long>& ts = {1, 2}) {
  CheckReport rep;
  rep.target = "support-lemma";
  rep.params = Json{{"k_window", k_window}, {"j1_max", j1_max}, {"i1_max", i1_max}};
  for (long t : ts)
    for (long kp = -k_window; kp <= k_window; ++kp)
      for (long k1 = -k_window; k1 <= k_window; ++k1)
        for (long j1 = 1; j1 <= j1_max; ++j1)
          for (long i1 = 0; i1 <= i1_max; ++i1) {
            SupportReport at = check_support_lemma(t, kp, k1, j1, i1, i1 * j1);
            SupportReport above = check_support_lemma(t, kp, k1, j1, i1, i1 * j1 + 1);
            SupportReport above2 = check_support_lemma(t, kp, k1, j1, i1, i1 * j1 + 2);
            ++rep.checked;
            if (!at.ok || !above.ok || !above.vanished || !above2.ok || !above2.vanished)
              rep.fail(Json{{"t", t}, {"kp", kp}, {"k1", k1}, {"j1", j1}, {"i1", i1}});
          }
  return rep;
}

/// phi intertwines the native and twisted actions on monomial states of
/// bounded degree, for the given level pairs (l1 = 0 forces phi = id).
inline CheckReport verify_phi(long degree, long generators, uint64_t seed,
                              const std::vector<std::pair<QLaurent, QLaurent>>& levels) {
  CheckReport rep;
  rep.target = "phi";
  rep.params = Json{{"degree", degree}, {"generators", generators}, {"seed", seed},
                    {"level_pairs", levels.size()}};
  for (const auto& [l1, l2] : levels) {
    InductionSpec tilde = make_vacuum("tilde-A", l1, l2);
    InductionSpec hat = make_vacuum("hat-A", QLaurent(0), l2);
    Rng rng(seed);
    for (long i = 0; i < generators; ++i) {
      LieElem x = basis(sample_key("tilde-A", 3, rng));
      PBWState w = sample_state(tilde, degree, 2, rng);
      ++rep.checked;
      bool ok = phi_map(hat, l1, act(tilde, x, w)) == twisted_act(hat, l1, x, phi_map(hat, l1, w));
      if (l1.is_zero()) ok = ok && phi_map(hat, l1, w) == w;
      if (!ok)
        rep.fail(Json{{"l1", l1.str()}, {"l2", l2.str()}, {"x", elem_str(x)},
                      {"w", state_str(tilde, w)}});
    }
  }
  return rep;
}

/// Random Verma states get a verified annihilation bound.
inline CheckReport verify_restrictedness(long n_states, uint64_t seed, long margin = 3) {
  CheckReport rep;
  rep.target = "restrictedness";
  rep.params = Json{{"states", n_states}, {"seed", seed}, {"margin", margin}};
  InductionSpec verma = make_verma(QLaurent(0), QLaurent(1));
  InductionSpec ind = make_ind(QLaurent(0), QLaurent(Rational(1, 2)), 1);
  std::vector<long> ks;
  for (long k = -4; k <= 4; ++k) ks.push_back(k);
  Rng rng(seed);
  for (long i = 0; i < n_states; ++i) {
    const InductionSpec& S = (i % 2 == 0) ? verma : ind;
    PBWState w = sample_state(S, 4, 3, rng);
    ++rep.checked;
    try {
      long t = restrictedness_bound(S, w, ks, margin);
      if (t != state_depth(w) + S.bottom.cutoff + 1)
        rep.fail(Json{{"w", state_str(S, w)}, {"t", t}});
    } catch (const std::logic_error& e) {
      rep.fail(Json{{"w", state_str(S, w)}, {"error", e.what()}});
    }
  }
  return rep;
}

/// Quasi-locality over sampled parameter tuples and Verma states.
inline CheckReport verify_quasilocal(long tuples, long n_states, uint64_t seed,
                                     long mode_lo = -4, long mode_hi = 4,
                                     long max_depth = 4) {
  CheckReport rep;
  rep.target = "quasi-local";
  rep.params = Json{{"tuples", tuples},   {"states", n_states},
                    {"seed", seed},       {"mode_lo", mode_lo},
                    {"mode_hi", mode_hi}, {"max_depth", max_depth}};
  InductionSpec S = make_verma(QLaurent(0), QLaurent(1));
  Rng rng(seed);
  std::vector<PBWState> states;
  for (long i = 0; i < n_states; ++i) states.push_back(sample_state(S, max_depth, 3, rng));
  for (long i = 0; i < tuples; ++i) {
    long k = rng.range(-2, 2), m = rng.range(-2, 2), r = rng.range(-2, 2),
         n = rng.range(-2, 2);
    QuasiLocalityReport q = check_quasi_locality(k, m, r, n, S, states, mode_lo, mode_hi);
    ++rep.checked;
    if (!q.ok())
      rep.fail(Json{{"k", k}, {"m", m}, {"r", r}, {"n", n}, {"failure", q.failures.front()}});
  }
  return rep;
}

/// Sampled generating-function identity sweep.
inline CheckReport verify_gf(const std::string& identity, long tuples, long mode_lo,
                             long mode_hi, uint64_t seed) {
  CheckReport rep;
  rep.target = "gf:" + identity;
  rep.params = Json{{"identity", identity}, {"tuples", tuples}, {"mode_lo", mode_lo},
                    {"mode_hi", mode_hi},   {"seed", seed}};
  Rng rng(seed);
  for (long i = 0; i < tuples; ++i) {
    std::map<std::string, long> params;
    if (identity == "eq2.5") {
      params = {{"alpha", rng.range(-3, 3)}, {"m", rng.range(-3, 3)},
                {"beta", rng.range(-3, 3)},  {"n", rng.range(-3, 3)}};
    } else if (identity == "eq3.8" || identity == "eq4.2") {
      params = {{"k", rng.range(-3, 3)}, {"r", rng.range(-3, 3)}};
    } else {
      params = {{"k", rng.range(-3, 3)}, {"m", rng.range(-3, 3)},
                {"r", rng.range(-3, 3)}, {"n", rng.range(-3, 3)}};
    }
    GfReport g = check_gf_identity(identity, params, mode_lo, mode_hi);
    ++rep.checked;
    if (!g.ok()) {
      Json p;
      for (const auto& [k, v] : params) p[k] = v;
      rep.fail(Json{{"params", p},
                    {"e1", g.mismatches.front().e1},
                    {"e2", g.mismatches.front().e2},
                    {"lhs", g.mismatches.front().lhs},
                    {"rhs", g.mismatches.front().rhs}});
    }
  }
  return rep;
}

/// Vacuum grading: creation modes raise degree by exactly their t-depth.
inline CheckReport verify_grading(long trials, uint64_t seed) {
  CheckReport rep;
  rep.target = "grading";
  rep.params = Json{{"trials", trials}, {"seed", seed}};
  InductionSpec V = make_vacuum("tilde-A", QLaurent(1), QLaurent(2));
  Rng rng(seed);
  for (long i = 0; i < trials; ++i) {
    PBWState w = sample_state(V, 3, 2, rng);
    long m = rng.range(1, 3);
    PBWState r = act(V, basis(loop(GKey{rng.range(-2, 2), rng.range(-2, 2)}, -m)), w);
    ++rep.checked;
    if (r.is_zero() || state_depth(r) != state_depth(w) + m)
      rep.fail(Json{{"w", state_str(V, w)}, {"m", m}});
  }
  return rep;
}

}  // namespace qdo
