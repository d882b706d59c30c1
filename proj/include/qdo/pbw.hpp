#pragma once

// Induced-module engine: PBW normal ordering and straightening over a
// pluggable bottom module.
//
// A state is a linear combination of normal-ordered creation monomials
// applied to bottom-module basis vectors. Straightening rewrites an
// arbitrary word of generators into that normal form with adjacent
// transpositions:
//
//   a b = b a + [a,b]
//
// where the correction is one generator shorter, so the rewriting
// terminates (length, then inversion count, strictly drops). Central
// generators scale by the levels; annihilator-side generators commute
// rightward until they reach the bottom, where the tabulated action (zero
// beyond the table) applies.
//
// The symbolic bottom mode models an abstract module V with E_{k,l} V = 0
// for l > t and V otherwise unknown: a single bottom-level application is
// tracked as a "stuck" operator, which is exactly what the support analysis
// of induced-module simplicity needs.

#include <qdo/algebra.hpp>
#include <qdo/catalogue.hpp>
#include <qdo/cocycle.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdo {

using Matrix = std::vector<std::vector<QLaurent>>;  // row-major, dim x dim

struct BottomModule {
  int dim = 1;
  long cutoff = 0;  // keys with grade > cutoff annihilate the bottom
  std::map<BasisKey, Matrix, KeyLess> action;
  bool symbolic = false;
};

struct BottomRef {
  int index = 0;
  std::optional<BasisKey> stuck;  // symbolic mode only

  friend bool operator<(const BottomRef& a, const BottomRef& b) {
    if (a.index != b.index) return a.index < b.index;
    if (a.stuck.has_value() != b.stuck.has_value()) return !a.stuck.has_value();
    if (!a.stuck) return false;
    return key_cmp(*a.stuck, *b.stuck) < 0;
  }
  friend bool operator==(const BottomRef& a, const BottomRef& b) {
    if (a.index != b.index || a.stuck.has_value() != b.stuck.has_value()) return false;
    return !a.stuck || key_cmp(*a.stuck, *b.stuck) == 0;
  }
};

struct PBWTerm {
  std::vector<BasisKey> monomial;  // creation keys in canonical order
  BottomRef bottom;

  friend bool operator<(const PBWTerm& a, const PBWTerm& b) {
    if (a.monomial.size() != b.monomial.size())
      return a.monomial.size() < b.monomial.size();
    for (size_t i = 0; i < a.monomial.size(); ++i)
      if (int c = key_cmp(a.monomial[i], b.monomial[i])) return c < 0;
    return a.bottom < b.bottom;
  }
  friend bool operator==(const PBWTerm& a, const PBWTerm& b) {
    return a.monomial == b.monomial && a.bottom == b.bottom;
  }
};

class PBWState {
 public:
  using Terms = std::map<PBWTerm, QLaurent>;

  PBWState() = default;

  static PBWState bottom_vector(int index = 0) {
    PBWState s;
    s.add(PBWTerm{{}, BottomRef{index, std::nullopt}}, QLaurent(1));
    return s;
  }

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  void add(const PBWTerm& t, const QLaurent& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(t);
    if (it == terms_.end()) {
      terms_.emplace(t, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  PBWState& operator+=(const PBWState& o) {
    for (const auto& [t, c] : o.terms_) add(t, c);
    return *this;
  }
  PBWState& operator-=(const PBWState& o) {
    for (const auto& [t, c] : o.terms_) add(t, -c);
    return *this;
  }
  friend PBWState operator+(PBWState a, const PBWState& b) { return a += b; }
  friend PBWState operator-(PBWState a, const PBWState& b) { return a -= b; }
  friend PBWState operator*(const QLaurent& s, const PBWState& x) {
    PBWState out;
    for (const auto& [t, c] : x.terms_) out.add(t, s * c);
    return out;
  }
  friend bool operator==(const PBWState& a, const PBWState& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const PBWState& a, const PBWState& b) { return !(a == b); }

 private:
  Terms terms_;
};

struct InductionSpec {
  AlgebraSpec algebra;
  KeyPred annihilator_side;  // marks bottom-side generators; rest create
  BottomModule bottom;
  QLaurent l1, l2;  // values of c1/K1 and c2/K2
  std::string bottom_symbol = "v";
  std::string kind = "ind";  // descriptive: verma | vacuum | ind | symbolic

  QLaurent level(Central c) const {
    switch (c) {
      case Central::C1:
      case Central::K1:
        return l1;
      case Central::C2:
      case Central::K2:
        return l2;
      default:
        throw std::invalid_argument("no level for central key " + central_str(c));
    }
  }
};

/// Depth of a monomial: total |grade| of its creation factors (the vacuum
/// grading m_1 + ... + m_r, or the Verma sum of |l|-indices).
inline long term_depth(const PBWTerm& t) {
  long d = 0;
  for (const auto& k : t.monomial) d -= key_grade(k);
  return d;
}

inline long state_depth(const PBWState& w) {
  long d = 0;
  for (const auto& [t, c] : w.terms()) {
    (void)c;
    d = std::max(d, term_depth(t));
  }
  return d;
}

namespace detail {

struct RawTerm {
  std::vector<BasisKey> word;  // applied left to right onto the bottom
  BottomRef bottom;
  QLaurent coeff;
};

// Rewriting measure: (length, distance of bottom-side keys from the bottom,
// inversion count). Every rewrite step strictly decreases it, so processing
// the frontier in descending order visits each distinct word at most once
// and lets coefficients of all derivation paths merge before the word is
// expanded. Without the merge the path count is exponential in depth.
struct WordMeasure {
  size_t len = 0, dist = 0, inv = 0;

  static WordMeasure of(const InductionSpec& S, const std::vector<BasisKey>& word) {
    WordMeasure m;
    m.len = word.size();
    for (size_t i = 0; i < word.size(); ++i) {
      const BasisKey& k = word[i];
      if (!is_central(k) && S.annihilator_side(k)) m.dist += word.size() - 1 - i;
      for (size_t j = i + 1; j < word.size(); ++j)
        if (creation_less(word[j], word[i])) ++m.inv;
    }
    return m;
  }

  friend bool operator<(const WordMeasure& a, const WordMeasure& b) {
    if (a.len != b.len) return a.len < b.len;
    if (a.dist != b.dist) return a.dist < b.dist;
    return a.inv < b.inv;
  }
};

struct FrontKey {
  WordMeasure measure;
  std::vector<BasisKey> word;
  BottomRef bottom;

  friend bool operator<(const FrontKey& a, const FrontKey& b) {
    // descending measure first: map.begin() is the next word to expand
    if (b.measure < a.measure) return true;
    if (a.measure < b.measure) return false;
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    for (size_t i = 0; i < a.word.size(); ++i)
      if (int c = key_cmp(a.word[i], b.word[i])) return c < 0;
    return a.bottom < b.bottom;
  }
};

inline PBWState normalize(const InductionSpec& S, std::deque<RawTerm> seed) {
  PBWState out;
  std::map<FrontKey, QLaurent> frontier;

  auto push_term = [&](std::vector<BasisKey> word, BottomRef bottom, QLaurent coeff) {
    if (coeff.is_zero()) return;
    FrontKey key{WordMeasure::of(S, word), std::move(word), bottom};
    auto [it, fresh] = frontier.try_emplace(std::move(key), std::move(coeff));
    if (!fresh) {
      it->second += coeff;
      if (it->second.is_zero()) frontier.erase(it);
    }
  };

  // swap word[i], word[i+1] and add the bracket correction
  auto transpose = [&](const std::vector<BasisKey>& word, const BottomRef& bottom,
                       const QLaurent& coeff, size_t i) {
    std::vector<BasisKey> swapped = word;
    std::swap(swapped[i], swapped[i + 1]);
    push_term(std::move(swapped), bottom, coeff);
    LieElem corr = S.algebra.bracket_rule(word[i], word[i + 1]);
    for (const auto& [k, c] : corr.terms()) {
      std::vector<BasisKey> shorter;
      shorter.reserve(word.size() - 1);
      shorter.assign(word.begin(), word.begin() + static_cast<long>(i));
      shorter.push_back(k);
      shorter.insert(shorter.end(), word.begin() + static_cast<long>(i) + 2, word.end());
      push_term(std::move(shorter), bottom, coeff * c);
    }
  };

  for (auto& t : seed) push_term(std::move(t.word), t.bottom, std::move(t.coeff));

  while (!frontier.empty()) {
    auto first = frontier.begin();
    std::vector<BasisKey> word = first->first.word;
    BottomRef bottom = first->first.bottom;
    QLaurent coeff = std::move(first->second);
    frontier.erase(first);

    // central generators scale by the levels, wherever they sit
    bool stripped = false;
    for (size_t i = 0; i < word.size(); ++i) {
      if (is_central(word[i])) {
        const auto* cen = std::get_if<Central>(&word[i]);
        if (!cen)
          throw std::invalid_argument("no induction level for central key " +
                                      key_str(word[i]));
        coeff *= S.level(*cen);
        word.erase(word.begin() + static_cast<long>(i));
        push_term(std::move(word), bottom, std::move(coeff));
        stripped = true;
        break;
      }
    }
    if (stripped) continue;

    // rightmost annihilator-side generator walks toward the bottom
    size_t n = word.size();
    size_t pos = n;
    for (size_t i = n; i-- > 0;) {
      if (S.annihilator_side(word[i])) {
        pos = i;
        break;
      }
    }
    if (pos != n) {
      if (pos == n - 1) {
        BasisKey g = word.back();
        word.pop_back();
        if (S.bottom.symbolic) {
          if (key_grade(g) > S.bottom.cutoff) continue;  // kills the abstract V
          if (bottom.stuck)
            throw std::domain_error(
                "symbolic bottom: a second bottom-level operator reached the bottom");
          bottom.stuck = g;
          push_term(std::move(word), bottom, std::move(coeff));
        } else if (auto it = S.bottom.action.find(g); it != S.bottom.action.end()) {
          const Matrix& M = it->second;
          for (int row = 0; row < S.bottom.dim; ++row) {
            const QLaurent& entry = M[row][bottom.index];
            if (entry.is_zero()) continue;
            push_term(word, BottomRef{row, std::nullopt}, coeff * entry);
          }
        }  // absent from the table: zero
      } else {
        transpose(word, bottom, coeff, pos);
      }
      continue;
    }

    // creation-only word: sort by adjacent transpositions
    size_t inv = n;
    for (size_t i = 0; i + 1 < n; ++i) {
      if (creation_less(word[i + 1], word[i])) {
        inv = i;
        break;
      }
    }
    if (inv != n) {
      transpose(word, bottom, coeff, inv);
      continue;
    }

    out.add(PBWTerm{std::move(word), bottom}, coeff);
  }
  return out;
}

}  // namespace detail

/// Left action of an algebra element on a state, straightened back to
/// normal form.
inline PBWState act(const InductionSpec& S, const LieElem& x, const PBWState& w) {
  S.algebra.require_member(x);
  std::deque<detail::RawTerm> work;
  for (const auto& [xk, xc] : x.terms()) {
    for (const auto& [wt, wc] : w.terms()) {
      detail::RawTerm t;
      t.word.reserve(wt.monomial.size() + 1);
      t.word.push_back(xk);
      t.word.insert(t.word.end(), wt.monomial.begin(), wt.monomial.end());
      t.bottom = wt.bottom;
      t.coeff = xc * wc;
      work.push_back(std::move(t));
    }
  }
  return detail::normalize(S, std::move(work));
}

/// act(x, act(y, w)) - act(y, act(x, w)) == act([x,y], w).
inline bool check_module_axiom(const InductionSpec& S, const LieElem& x, const LieElem& y,
                               const PBWState& w) {
  PBWState lhs = act(S, x, act(S, y, w)) - act(S, y, act(S, x, w));
  return lhs == act(S, bracket(S.algebra, x, y), w);
}

// ---- spec builders ------------------------------------------------------

/// Generic builder: bottom-side generators are those of grade >= 0.
inline InductionSpec make_induction(const std::string& algebra_name, QLaurent l1, QLaurent l2,
                                    BottomModule bottom, std::string kind,
                                    std::string symbol) {
  InductionSpec S;
  S.algebra = algebra(algebra_name);
  S.annihilator_side = [](const BasisKey& k) { return key_grade(k) >= 0; };
  S.bottom = std::move(bottom);
  S.l1 = std::move(l1);
  S.l2 = std::move(l2);
  S.kind = std::move(kind);
  S.bottom_symbol = std::move(symbol);
  return S;
}

/// Verma-type module over vq: E_{k,l} with l >= 1 annihilate the bottom,
/// E_{k,0} act through the table (zero by default).
inline InductionSpec make_verma(QLaurent l1, QLaurent l2,
                                std::map<BasisKey, Matrix, KeyLess> table = {}, int dim = 1) {
  BottomModule B;
  B.dim = dim;
  B.cutoff = 0;
  B.action = std::move(table);
  return make_induction("vq", std::move(l1), std::move(l2), std::move(B), "verma", "v");
}

/// Induced module over vq with bottom cutoff t: E_{k,l} with l > t
/// annihilate, keys with 0 <= l <= t act through the table.
inline InductionSpec make_ind(QLaurent l1, QLaurent l2, long cutoff,
                              std::map<BasisKey, Matrix, KeyLess> table = {}, int dim = 1) {
  BottomModule B;
  B.dim = dim;
  B.cutoff = cutoff;
  B.action = std::move(table);
  return make_induction("vq", std::move(l1), std::move(l2), std::move(B), "ind", "v");
}

/// Vacuum module over tilde-A or hat-A: nonnegative loop modes act as zero.
inline InductionSpec make_vacuum(const std::string& algebra_name, QLaurent l1, QLaurent l2) {
  BottomModule B;
  B.dim = 1;
  B.cutoff = -1;
  return make_induction(algebra_name, std::move(l1), std::move(l2), std::move(B), "vacuum",
                        "vac");
}

/// Symbolic bottom over vq with cutoff t: V abstract with E_{k,l} V = 0 for
/// l > t; one bottom-level application is tracked symbolically.
inline InductionSpec make_symbolic(long t, QLaurent l1 = QLaurent(), QLaurent l2 = QLaurent()) {
  BottomModule B;
  B.dim = 1;
  B.cutoff = t;
  B.symbolic = true;
  return make_induction("vq", std::move(l1), std::move(l2), std::move(B), "symbolic", "v");
}

// ---- bottom consistency -------------------------------------------------

struct ConsistencyReport {
  bool consistent = true;
  std::vector<std::string> violations;
};

namespace detail {

inline Matrix zero_matrix(int dim) {
  return Matrix(dim, std::vector<QLaurent>(dim));
}

inline Matrix bottom_matrix(const InductionSpec& S, const BasisKey& k) {
  auto it = S.bottom.action.find(k);
  if (it != S.bottom.action.end()) return it->second;
  return zero_matrix(S.bottom.dim);
}

inline Matrix mat_mul(const Matrix& A, const Matrix& B) {
  int n = static_cast<int>(A.size());
  Matrix C = zero_matrix(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (A[i][k].is_zero()) continue;
      for (int j = 0; j < n; ++j) C[i][j] += A[i][k] * B[k][j];
    }
  return C;
}

}  // namespace detail

/// rho([X,Y]) == rho(X) rho(Y) - rho(Y) rho(X) for bottom-side generator
/// pairs: the tabulated keys plus the default-zero keys within the index
/// window. Central summands of the bracket act by the levels, which is how
/// forced constraints (a one-dimensional bottom forcing l1 = 0) surface.
inline ConsistencyReport check_bottom_consistency(const InductionSpec& S, long window) {
  ConsistencyReport rep;
  std::vector<BasisKey> keys;
  for (const auto& [k, m] : S.bottom.action) {
    (void)m;
    keys.push_back(k);
  }
  if (S.algebra.name == "vq") {
    for (long k = -window; k <= window; ++k)
      for (long l = 0; l <= S.bottom.cutoff + 1; ++l) {
        if (k == 0 && l == 0) continue;
        BasisKey key = EKey{k, l};
        if (!S.bottom.action.count(key)) keys.push_back(key);
      }
  } else {
    for (long a = -window; a <= window; ++a)
      for (long m = -window; m <= window; ++m)
        for (long d = 0; d <= std::max<long>(S.bottom.cutoff + 1, 1); ++d) {
          BasisKey key = loop(GKey{a, m}, d);
          if (!S.bottom.action.count(key)) keys.push_back(key);
        }
  }

  for (const auto& X : keys) {
    for (const auto& Y : keys) {
      Matrix lhs = detail::mat_mul(detail::bottom_matrix(S, X), detail::bottom_matrix(S, Y));
      Matrix neg = detail::mat_mul(detail::bottom_matrix(S, Y), detail::bottom_matrix(S, X));
      LieElem br = S.algebra.bracket_rule(X, Y);
      Matrix rhs = detail::zero_matrix(S.bottom.dim);
      for (const auto& [k, c] : br.terms()) {
        if (const auto* cen = std::get_if<Central>(&k)) {
          QLaurent scale = c * S.level(*cen);
          for (int i = 0; i < S.bottom.dim; ++i) rhs[i][i] += scale;
          continue;
        }
        Matrix M = detail::bottom_matrix(S, k);
        for (int i = 0; i < S.bottom.dim; ++i)
          for (int j = 0; j < S.bottom.dim; ++j) rhs[i][j] += c * M[i][j];
      }
      bool ok = true;
      for (int i = 0; i < S.bottom.dim && ok; ++i)
        for (int j = 0; j < S.bottom.dim && ok; ++j)
          if (lhs[i][j] - neg[i][j] != rhs[i][j]) ok = false;
      if (!ok) {
        rep.consistent = false;
        rep.violations.push_back("pair (" + key_str(X) + ", " + key_str(Y) + ")");
      }
    }
  }
  return rep;
}

// ---- restrictedness (category-O membership evidence) --------------------

/// Annihilation bound t = depth(w) + cutoff + 1: every E_{k,l} with l >= t
/// kills w. Verifies the bound for the sampled k over [t, t+margin] and
/// throws if the engine ever contradicts it.
inline long restrictedness_bound(const InductionSpec& S, const PBWState& w,
                                 const std::vector<long>& k_samples, long margin = 3) {
  if (S.algebra.name != "vq")
    throw std::invalid_argument("restrictedness_bound: vq induction specs only");
  long t = state_depth(w) + S.bottom.cutoff + 1;
  for (long k : k_samples)
    for (long l = t; l <= t + margin; ++l)
      if (!act(S, E(k, l), w).is_zero())
        throw std::logic_error("restrictedness bound violated at E[" + std::to_string(k) +
                               "," + std::to_string(l) + "]");
  return t;
}

// ---- support containment of the induced-module simplicity argument ------

struct SupportReport {
  bool ok = true;
  bool vanished = false;
  QLaurent scalar;  // coefficient of the singleton when it survives
  std::string detail;
};

/// Symbolically reduces E_{k',t+j} E_{k1,-j1}^{i1} v over an abstract
/// bottom with cutoff t. For j > i1*j1 the result must vanish; for
/// j == i1*j1 it must lie in the line spanned by E_{k'+i1*k1, t} v.
inline SupportReport check_support_lemma(long t, long kp, long k1, long j1, long i1, long j) {
  if (t < 1 || j1 < 1 || i1 < 0 || j < i1 * j1)
    throw std::invalid_argument("check_support_lemma: need t,j1 >= 1, i1 >= 0, j >= i1*j1");
  InductionSpec S = make_symbolic(t);
  PBWState w = PBWState::bottom_vector();
  for (long i = 0; i < i1; ++i) w = act(S, E(k1, -j1), w);
  PBWState r = act(S, E(kp, t + j), w);

  SupportReport rep;
  if (r.is_zero()) {
    rep.vanished = true;
    if (j == i1 * j1) rep.detail = "vanished (zero scalar case)";
    return rep;
  }
  if (j > i1 * j1) {
    rep.ok = false;
    rep.detail = "expected zero for j > i1*j1";
    return rep;
  }
  if (r.terms().size() != 1) {
    rep.ok = false;
    rep.detail = "support is not a singleton";
    return rep;
  }
  const auto& [term, coeff] = *r.terms().begin();
  BasisKey expected = EKey{kp + i1 * k1, t};
  if (!term.monomial.empty() || !term.bottom.stuck ||
      key_cmp(*term.bottom.stuck, expected) != 0) {
    rep.ok = false;
    rep.detail = "support outside C*" + key_str(expected) + "*v";
    return rep;
  }
  rep.scalar = coeff;
  return rep;
}

// ---- the vertex-algebra intertwiner phi ---------------------------------

/// The twisted action of tilde-A on the hat-A vacuum module at level l2:
/// a (x) t^i acts as the hat-A action of a (x) t^i minus mu(a) l1 when
/// i = -1, K1 acts as l1, K2 as l2.
inline PBWState twisted_act(const InductionSpec& hat_spec, const QLaurent& l1,
                            const LieElem& x, const PBWState& w) {
  const TrivializingMap mu = mu_A();
  LieElem hat_part;
  QLaurent scalar;
  for (const auto& [k, c] : x.terms()) {
    if (const auto* cen = std::get_if<Central>(&k)) {
      if (*cen == Central::K1) {
        scalar += c * l1;
        continue;
      }
      if (*cen == Central::K2) {
        hat_part.add(k, c);
        continue;
      }
      throw std::invalid_argument("twisted_act: unexpected central key " + key_str(k));
    }
    const auto& lk = std::get<LoopKey>(k);
    hat_part.add(k, c);
    if (lk.deg == -1) {
      BasisKey inner = std::visit([](const auto& v) -> BasisKey { return v; }, lk.inner);
      scalar -= c * mu.mu(inner) * l1;
    }
  }
  PBWState out = act(hat_spec, hat_part, w);
  if (!scalar.is_zero()) out += scalar * w;
  return out;
}

/// phi: V_{tilde}(l1,l2; 0) -> V_{hat}(l2; 0) defined on normal monomials
/// by replaying the creation word through the twisted action.
inline PBWState phi_map(const InductionSpec& hat_spec, const QLaurent& l1, const PBWState& w) {
  PBWState out;
  for (const auto& [term, c] : w.terms()) {
    PBWState img = PBWState::bottom_vector();
    for (auto it = term.monomial.rbegin(); it != term.monomial.rend(); ++it)
      img = twisted_act(hat_spec, l1, basis(*it), img);
    out += c * img;
  }
  return out;
}

}  // namespace qdo
