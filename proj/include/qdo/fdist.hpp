#pragma once

// Formal-distribution calculus in two variables.
//
// Exponent convention: a DistWindow stores the coefficient of x1^e1 x2^e2
// and tracks the rectangle of exponents on which those coefficients agree
// with the (infinite) distribution it represents. Polynomial multiplication
// and differentiation shrink the rectangle; nothing outside a window is
// ever trusted.
//
// The generating functions in play:
//   E_k(x)       = sum_l E_{k,l} x^{-l-1}
//   Ehat_k(x)    = x E_k(x) = sum_l E_{k,l} x^{-l}
//   Etilde_{k,m}(x) = Ehat_k(q^m x),  coefficient of x^{-l} is q^{-ml} E_{k,l}
//   G_{a,m}(x)   = sum_i (G_{a,m} (x) t^i) x^{-i-1}
//
// Delta variants expand delta(z) = sum_n z^n at z = s*x2/x1 for a monomial
// scale s. Each variant is supported on one anti-diagonal e1+e2 = d, so a
// product with a series in x2 alone has the exact closed form used by
// series_delta_coeff below.

#include <qdo/catalogue.hpp>
#include <qdo/pbw.hpp>
#include <qdo/text.hpp>

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace qdo {

struct Window2 {
  long e1_lo, e1_hi, e2_lo, e2_hi;

  bool empty() const { return e1_lo > e1_hi || e2_lo > e2_hi; }
  bool contains(long e1, long e2) const {
    return e1 >= e1_lo && e1 <= e1_hi && e2 >= e2_lo && e2 <= e2_hi;
  }
  Window2 intersect(const Window2& o) const {
    return {std::max(e1_lo, o.e1_lo), std::min(e1_hi, o.e1_hi), std::max(e2_lo, o.e2_lo),
            std::min(e2_hi, o.e2_hi)};
  }
  Window2 translate(long d1, long d2) const {
    return {e1_lo + d1, e1_hi + d1, e2_lo + d2, e2_hi + d2};
  }
};

class DistWindow {
 public:
  explicit DistWindow(Window2 w) : win_(w) {
    if (w.empty()) throw std::invalid_argument("DistWindow: empty window");
  }

  const Window2& window() const { return win_; }

  void set(long e1, long e2, LieElem v) {
    if (!win_.contains(e1, e2))
      throw std::logic_error("DistWindow::set outside the valid window");
    if (v.is_zero())
      coeffs_.erase({e1, e2});
    else
      coeffs_[{e1, e2}] = std::move(v);
  }

  LieElem at(long e1, long e2) const {
    if (!win_.contains(e1, e2))
      throw std::logic_error("DistWindow::at outside the valid window");
    auto it = coeffs_.find({e1, e2});
    return it == coeffs_.end() ? LieElem() : it->second;
  }

  DistWindow& operator+=(const DistWindow& o) {
    Window2 w = win_.intersect(o.win_);
    if (w.empty()) throw std::invalid_argument("DistWindow: sum has empty valid window");
    DistWindow out(w);
    for (long e1 = w.e1_lo; e1 <= w.e1_hi; ++e1)
      for (long e2 = w.e2_lo; e2 <= w.e2_hi; ++e2)
        out.set(e1, e2, at(e1, e2) + o.at(e1, e2));
    return *this = std::move(out);
  }

  friend DistWindow operator*(const QLaurent& s, const DistWindow& f) {
    DistWindow out(f.win_);
    for (const auto& [pos, v] : f.coeffs_) out.set(pos.first, pos.second, s * v);
    return out;
  }

  /// s * x1^d1 * x2^d2 * f: coefficients translate, and so does the window.
  DistWindow mul_monomial(const QLaurent& s, long d1, long d2) const {
    DistWindow out(win_.translate(d1, d2));
    for (const auto& [pos, v] : coeffs_) out.set(pos.first + d1, pos.second + d2, s * v);
    return out;
  }

  /// (x1 - c*x2) * f: the valid window shrinks by one at the low end of
  /// both exponent ranges.
  DistWindow mul_x1_minus_cx2(const QLaurent& c) const {
    DistWindow a = mul_monomial(QLaurent(1), 1, 0);
    DistWindow b = mul_monomial(-c, 0, 1);
    a += b;
    return a;
  }

  /// x2 d/dx2: multiplies each coefficient by its x2-exponent.
  DistWindow apply_x2_ddx2() const {
    DistWindow out(win_);
    for (const auto& [pos, v] : coeffs_) out.set(pos.first, pos.second, QLaurent(pos.second) * v);
    return out;
  }

  /// d/dx2: the e2 range shifts down by one.
  DistWindow apply_ddx2() const {
    DistWindow out(win_.translate(0, -1));
    for (const auto& [pos, v] : coeffs_)
      out.set(pos.first, pos.second - 1, QLaurent(pos.second) * v);
    return out;
  }

 private:
  Window2 win_;
  std::map<std::pair<long, long>, LieElem> coeffs_;
};

// ---- generating-function families ---------------------------------------

struct GenFun {
  enum class Family { E, Ehat, Etilde, Gloop };
  Family family = Family::E;
  long k = 0, m = 0;  // k (or alpha for Gloop) and the q-shift index
  long qshift = 0;    // evaluate at q^qshift * x

  /// Coefficient of x^e.
  LieElem coeff(long e) const {
    LieElem out;
    switch (family) {
      case Family::E:
        out = E(k, -e - 1);
        break;
      case Family::Ehat:
        out = E(k, -e);
        break;
      case Family::Etilde:
        out = q_pow(m * e) * E(k, -e);
        break;
      case Family::Gloop:
        out = basis(loop(GKey{k, m}, -e - 1));
        break;
    }
    if (qshift != 0) out = q_pow(qshift * e) * out;
    return out;
  }

  /// Exponent of x carrying the given family mode index.
  long exp_of_mode(long mode) const {
    switch (family) {
      case Family::E:
      case Family::Gloop:
        return -mode - 1;
      default:
        return -mode;
    }
  }
};

inline GenFun gf_E(long k) { return {GenFun::Family::E, k, 0, 0}; }
inline GenFun gf_Ehat(long k) { return {GenFun::Family::Ehat, k, 0, 0}; }
inline GenFun gf_Etilde(long k, long m) { return {GenFun::Family::Etilde, k, m, 0}; }
inline GenFun gf_Gloop(long alpha, long m) { return {GenFun::Family::Gloop, alpha, m, 0}; }

/// [f(x1), g(x2)] expanded entrywise over the mode window: the (e1,e2)
/// coefficient is the bracket of the two mode coefficients.
inline DistWindow commutator_window(const AlgebraSpec& A, const GenFun& f, const GenFun& g,
                                    long mode_lo, long mode_hi) {
  long f_lo = f.exp_of_mode(mode_hi), f_hi = f.exp_of_mode(mode_lo);
  if (f_lo > f_hi) std::swap(f_lo, f_hi);
  long g_lo = g.exp_of_mode(mode_hi), g_hi = g.exp_of_mode(mode_lo);
  if (g_lo > g_hi) std::swap(g_lo, g_hi);
  DistWindow out(Window2{f_lo, f_hi, g_lo, g_hi});
  for (long e1 = f_lo; e1 <= f_hi; ++e1)
    for (long e2 = g_lo; e2 <= g_hi; ++e2)
      out.set(e1, e2, bracket(A, f.coeff(e1), g.coeff(e2)));
  return out;
}

// ---- delta distributions -------------------------------------------------

enum class DeltaVariant {
  Plain,       // delta(s x2/x1)
  X1Inv,       // x1^{-1} delta(s x2/x1)
  X2DDx2,      // x2 d/dx2 delta(s x2/x1)
  DDx2X1Inv,   // d/dx2 [ x1^{-1} delta(s x2/x1) ]
  X1InvX2Inv,  // x1^{-1} x2^{-1} delta(s x2/x1)
};

namespace detail {

/// Anti-diagonal e1+e2 = d carrying the variant.
inline long variant_diagonal(DeltaVariant v) {
  switch (v) {
    case DeltaVariant::Plain:
    case DeltaVariant::X2DDx2:
      return 0;
    case DeltaVariant::X1Inv:
      return -1;
    default:
      return -2;
  }
}

inline void require_monomial_scale(const QLaurent& s) {
  if (!s.is_monomial())
    throw std::invalid_argument("delta scale must be a monomial c*q^a");
}

/// Coefficient of x1^e1 x2^e2 in the pure delta variant (scalar valued).
inline QLaurent variant_coeff(DeltaVariant v, const QLaurent& s, long e1, long e2) {
  if (e1 + e2 != variant_diagonal(v)) return QLaurent();
  switch (v) {
    case DeltaVariant::Plain:
      return s.pow(e2);
    case DeltaVariant::X1Inv:
      return s.pow(e2);
    case DeltaVariant::X2DDx2:
      return QLaurent(e2) * s.pow(e2);
    case DeltaVariant::DDx2X1Inv:
      return QLaurent(e2 + 1) * s.pow(e2 + 1);
    case DeltaVariant::X1InvX2Inv:
      return s.pow(e2 + 1);
  }
  return QLaurent();
}

}  // namespace detail

/// Materializes a delta variant on a window. Coefficients are scalars times
/// the identity, stored as QLaurent-scaled empty-key elements is not a
/// thing here, so the caller multiplies by the element it needs.
inline DistWindow delta_window(const QLaurent& scale, DeltaVariant v, Window2 win,
                               const LieElem& factor) {
  detail::require_monomial_scale(scale);
  DistWindow out(win);
  for (long e2 = win.e2_lo; e2 <= win.e2_hi; ++e2) {
    long e1 = detail::variant_diagonal(v) - e2;
    if (e1 < win.e1_lo || e1 > win.e1_hi) continue;
    out.set(e1, e2, detail::variant_coeff(v, scale, e1, e2) * factor);
  }
  return out;
}

/// One RHS summand: a series in x2 alone times a delta variant.
struct SeriesDeltaTerm {
  std::function<LieElem(long)> series;  // coefficient of x2^j
  DeltaVariant variant;
  QLaurent scale;
};

/// Exact coefficient of x1^e1 x2^e2 in series(x2) * variant(s x2/x1).
/// Because each variant lives on a single anti-diagonal, the product
/// collapses to one series coefficient:
///   Plain:       series(e1+e2)   * s^{-e1}
///   X1Inv:       series(e1+e2+1) * s^{-e1-1}
///   X2DDx2:      series(e1+e2)   * (-e1) s^{-e1}
///   DDx2X1Inv:   series(e1+e2+2) * (-e1-1) s^{-e1-1}
///   X1InvX2Inv:  series(e1+e2+2) * s^{-e1-1}
inline LieElem series_delta_coeff(const SeriesDeltaTerm& t, long e1, long e2) {
  detail::require_monomial_scale(t.scale);
  switch (t.variant) {
    case DeltaVariant::Plain:
      return t.scale.pow(-e1) * t.series(e1 + e2);
    case DeltaVariant::X1Inv:
      return t.scale.pow(-e1 - 1) * t.series(e1 + e2 + 1);
    case DeltaVariant::X2DDx2:
      return (QLaurent(-e1) * t.scale.pow(-e1)) * t.series(e1 + e2);
    case DeltaVariant::DDx2X1Inv:
      return (QLaurent(-e1 - 1) * t.scale.pow(-e1 - 1)) * t.series(e1 + e2 + 2);
    case DeltaVariant::X1InvX2Inv:
      return t.scale.pow(-e1 - 1) * t.series(e1 + e2 + 2);
  }
  return LieElem();
}

// ---- the named generating-function identities ----------------------------

struct GfMismatch {
  long e1, e2;
  std::string lhs, rhs;
};

struct GfReport {
  std::string identity;
  std::map<std::string, long> params;
  long mode_lo = 0, mode_hi = 0;
  long cells = 0;
  std::vector<GfMismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
};

namespace detail {

inline std::function<LieElem(long)> const_series(LieElem v) {
  return [v = std::move(v)](long j) { return j == 0 ? v : LieElem(); };
}

inline std::function<LieElem(long)> genfun_series(GenFun f) {
  return [f](long j) { return f.coeff(j); };
}

/// Series of [a,b](x2) for a,b in A: coefficient of x2^j is [a,b] (x) t^{-j-1}.
inline std::function<LieElem(long)> loop_series(LieElem base) {
  return [base = std::move(base)](long j) { return base.tensor_t(-j - 1); };
}

struct IdentitySides {
  const AlgebraSpec* alg;
  GenFun lhs_f, lhs_g;
  std::vector<SeriesDeltaTerm> rhs;
};

inline long param(const std::map<std::string, long>& p, const std::string& name) {
  auto it = p.find(name);
  if (it == p.end()) throw std::invalid_argument("missing identity parameter: " + name);
  return it->second;
}

inline IdentitySides build_identity(const std::string& identity,
                                    const std::map<std::string, long>& p) {
  IdentitySides s;
  if (identity == "eq2.5") {
    long a = param(p, "alpha"), m = param(p, "m"), b = param(p, "beta"), n = param(p, "n");
    s.alg = &algebra("tilde-A");
    s.lhs_f = gf_Gloop(a, m);
    s.lhs_g = gf_Gloop(b, n);
    const AlgebraSpec& base = algebra("A");
    LieElem x = G(a, m), y = G(b, n);
    s.rhs.push_back({loop_series(bracket(base, x, y)), DeltaVariant::X1Inv, QLaurent(1)});
    QLaurent psi = (*base.cocycle_rule)(GKey{a, m}, GKey{b, n});
    if (!psi.is_zero())
      s.rhs.push_back({const_series(psi * central(Central::K1)), DeltaVariant::X1Inv,
                       QLaurent(1)});
    QLaurent frm = (*base.form_rule)(GKey{a, m}, GKey{b, n});
    if (!frm.is_zero())
      s.rhs.push_back({const_series(frm * central(Central::K2)), DeltaVariant::DDx2X1Inv,
                       QLaurent(1)});
    return s;
  }
  if (identity == "eq3.8") {
    long k = param(p, "k"), r = param(p, "r");
    s.alg = &algebra("vq");
    s.lhs_f = gf_E(k);
    s.lhs_g = gf_E(r);
    GenFun t1 = gf_E(k + r);
    t1.qshift = k;
    s.rhs.push_back({[t1, k](long j) { return q_pow(k) * t1.coeff(j); }, DeltaVariant::X1Inv,
                     q_pow(k + r)});
    GenFun t2 = gf_E(k + r);
    t2.qshift = -k;
    s.rhs.push_back({[t2, k](long j) { return QLaurent(-1) * (q_pow(-k) * t2.coeff(j)); },
                     DeltaVariant::X1Inv, q_pow(-k - r)});
    if (k == -r) {
      s.rhs.push_back({const_series(QLaurent(k) * central(Central::C1)),
                       DeltaVariant::X1InvX2Inv, QLaurent(1)});
      s.rhs.push_back(
          {const_series(central(Central::C2)), DeltaVariant::DDx2X1Inv, QLaurent(1)});
    }
    return s;
  }
  if (identity == "eq4.2") {
    long k = param(p, "k"), r = param(p, "r");
    s.alg = &algebra("vq");
    s.lhs_f = gf_Ehat(k);
    s.lhs_g = gf_Ehat(r);
    GenFun t1 = gf_Ehat(k + r);
    t1.qshift = k;
    s.rhs.push_back({genfun_series(t1), DeltaVariant::Plain, q_pow(k + r)});
    GenFun t2 = gf_Ehat(k + r);
    t2.qshift = -k;
    s.rhs.push_back({[t2](long j) { return QLaurent(-1) * t2.coeff(j); }, DeltaVariant::Plain,
                     q_pow(-k - r)});
    if (k == -r) {
      s.rhs.push_back({const_series(QLaurent(k) * central(Central::C1)), DeltaVariant::Plain,
                       QLaurent(1)});
      s.rhs.push_back(
          {const_series(central(Central::C2)), DeltaVariant::X2DDx2, QLaurent(1)});
    }
    return s;
  }
  if (identity == "eq4.3") {
    long k = param(p, "k"), m = param(p, "m"), r = param(p, "r"), n = param(p, "n");
    s.alg = &algebra("vq");
    s.lhs_f = gf_Etilde(k, m);
    s.lhs_g = gf_Etilde(r, n);
    s.rhs.push_back(
        {genfun_series(gf_Etilde(k + r, n + k)), DeltaVariant::Plain, q_pow(-m + n + k + r)});
    GenFun t2 = gf_Etilde(k + r, n - k);
    s.rhs.push_back({[t2](long j) { return QLaurent(-1) * t2.coeff(j); }, DeltaVariant::Plain,
                     q_pow(-m + n - k - r)});
    if (k == -r) {
      s.rhs.push_back({const_series(QLaurent(k) * central(Central::C1)), DeltaVariant::Plain,
                       q_pow(n - m)});
      s.rhs.push_back(
          {const_series(central(Central::C2)), DeltaVariant::X2DDx2, q_pow(n - m)});
    }
    return s;
  }
  if (identity == "eq4.4") {
    long k = param(p, "k"), m = param(p, "m"), r = param(p, "r"), n = param(p, "n");
    s.alg = &algebra("tilde-A");
    s.lhs_f = gf_Gloop(k, m);
    s.lhs_g = gf_Gloop(r, n);
    if (-m + n + k + r == 0)
      s.rhs.push_back(
          {genfun_series(gf_Gloop(k + r, n + k)), DeltaVariant::X1Inv, QLaurent(1)});
    if (-m + n - k - r == 0) {
      GenFun t2 = gf_Gloop(k + r, n - k);
      s.rhs.push_back({[t2](long j) { return QLaurent(-1) * t2.coeff(j); },
                       DeltaVariant::X1Inv, QLaurent(1)});
    }
    if (k == -r && n == m) {
      s.rhs.push_back({const_series(QLaurent(k) * central(Central::K1)), DeltaVariant::X1Inv,
                       QLaurent(1)});
      s.rhs.push_back(
          {const_series(central(Central::K2)), DeltaVariant::DDx2X1Inv, QLaurent(1)});
    }
    return s;
  }
  throw std::invalid_argument("unknown identity: " + identity +
                              " (expected eq2.5, eq3.8, eq4.2, eq4.3 or eq4.4)");
}

}  // namespace detail

/// Expands both sides of a named identity over the mode window and compares
/// every coefficient exactly.
inline GfReport check_gf_identity(const std::string& identity,
                                  const std::map<std::string, long>& params, long mode_lo,
                                  long mode_hi) {
  if (mode_lo > mode_hi)
    throw std::invalid_argument("check_gf_identity: empty mode window");
  detail::IdentitySides sides = detail::build_identity(identity, params);
  DistWindow lhs = commutator_window(*sides.alg, sides.lhs_f, sides.lhs_g, mode_lo, mode_hi);

  GfReport rep;
  rep.identity = identity;
  rep.params = params;
  rep.mode_lo = mode_lo;
  rep.mode_hi = mode_hi;
  const Window2& w = lhs.window();
  for (long e1 = w.e1_lo; e1 <= w.e1_hi; ++e1) {
    for (long e2 = w.e2_lo; e2 <= w.e2_hi; ++e2) {
      LieElem rhs;
      for (const auto& t : sides.rhs) rhs += series_delta_coeff(t, e1, e2);
      ++rep.cells;
      if (lhs.at(e1, e2) != rhs)
        rep.mismatches.push_back({e1, e2, elem_str(lhs.at(e1, e2)), elem_str(rhs)});
    }
  }
  return rep;
}

// ---- quasi-locality -------------------------------------------------------

struct QuasiLocalityReport {
  long cells = 0;
  long states = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Multiplies [Etilde_{k,m}(x1), Etilde_{r,n}(x2)] by
/// (x1 - q^{-m+n+k+r} x2)(x1 - q^{-m+n-k-r} x2)(x1 - q^{n-m} x2)^2 and
/// verifies that every coefficient still valid after the degree-4 margin
/// annihilates each carrier state.
inline QuasiLocalityReport check_quasi_locality(long k, long m, long r, long n,
                                                const InductionSpec& S,
                                                const std::vector<PBWState>& states,
                                                long mode_lo, long mode_hi) {
  DistWindow com =
      commutator_window(algebra("vq"), gf_Etilde(k, m), gf_Etilde(r, n), mode_lo, mode_hi);
  DistWindow poly = com.mul_x1_minus_cx2(q_pow(-m + n + k + r))
                        .mul_x1_minus_cx2(q_pow(-m + n - k - r))
                        .mul_x1_minus_cx2(q_pow(n - m))
                        .mul_x1_minus_cx2(q_pow(n - m));
  const Window2& w = poly.window();
  if (w.empty())
    throw std::invalid_argument("check_quasi_locality: window too small for the "
                                "degree-4 margin");
  QuasiLocalityReport rep;
  rep.states = static_cast<long>(states.size());
  for (long e1 = w.e1_lo; e1 <= w.e1_hi; ++e1) {
    for (long e2 = w.e2_lo; e2 <= w.e2_hi; ++e2) {
      LieElem entry = poly.at(e1, e2);
      ++rep.cells;
      for (size_t i = 0; i < states.size(); ++i) {
        if (!act(S, entry, states[i]).is_zero())
          rep.failures.push_back("mode (" + std::to_string(e1) + "," + std::to_string(e2) +
                                 ") does not annihilate state #" + std::to_string(i));
      }
    }
  }
  return rep;
}

}  // namespace qdo
