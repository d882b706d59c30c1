#pragma once

// Basis keys for every algebra in the catalogue, as one tagged union.
//
//   EKey{k,l}      E_{k,l}, the q-difference operator basis
//   EijKey{m,n}    elementary matrices of gl_inf
//   GKey{a,m}      G_{a,m} = E_{m+a,m-a}, the even-parity subalgebra
//   GbarKey{a,m}   canonical covariant-algebra representatives
//   Central        c1, c2, K1, K2, c1bar
//   LoopKey        inner (x) t^deg, a loop-algebra element

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

namespace qdo {

struct EKey {
  long k = 0, l = 0;
  friend bool operator==(const EKey&, const EKey&) = default;
};
struct EijKey {
  long m = 0, n = 0;
  friend bool operator==(const EijKey&, const EijKey&) = default;
};
struct GKey {
  long alpha = 0, m = 0;
  friend bool operator==(const GKey&, const GKey&) = default;
};
struct GbarKey {
  long alpha = 0, m = 0;
  friend bool operator==(const GbarKey&, const GbarKey&) = default;
};
enum class Central { C1, C2, K1, K2, C1Bar };

using FiniteKey = std::variant<EKey, EijKey, GKey, GbarKey, Central>;

struct LoopKey {
  FiniteKey inner;
  long deg = 0;  // the power of t
};

using BasisKey = std::variant<EKey, EijKey, GKey, GbarKey, Central, LoopKey>;

inline int cmp_long(long a, long b) { return a < b ? -1 : a > b ? 1 : 0; }

inline int key_cmp(const BasisKey& a, const BasisKey& b);

inline int finite_key_cmp(const FiniteKey& a, const FiniteKey& b) {
  if (a.index() != b.index()) return a.index() < b.index() ? -1 : 1;
  switch (a.index()) {
    case 0: {
      const auto &x = std::get<EKey>(a), &y = std::get<EKey>(b);
      if (int c = cmp_long(x.k, y.k)) return c;
      return cmp_long(x.l, y.l);
    }
    case 1: {
      const auto &x = std::get<EijKey>(a), &y = std::get<EijKey>(b);
      if (int c = cmp_long(x.m, y.m)) return c;
      return cmp_long(x.n, y.n);
    }
    case 2: {
      const auto &x = std::get<GKey>(a), &y = std::get<GKey>(b);
      if (int c = cmp_long(x.alpha, y.alpha)) return c;
      return cmp_long(x.m, y.m);
    }
    case 3: {
      const auto &x = std::get<GbarKey>(a), &y = std::get<GbarKey>(b);
      if (int c = cmp_long(x.alpha, y.alpha)) return c;
      return cmp_long(x.m, y.m);
    }
    default: {
      auto x = std::get<Central>(a), y = std::get<Central>(b);
      return cmp_long(static_cast<long>(x), static_cast<long>(y));
    }
  }
}

inline int key_cmp(const BasisKey& a, const BasisKey& b) {
  if (a.index() != b.index()) return a.index() < b.index() ? -1 : 1;
  if (const auto* la = std::get_if<LoopKey>(&a)) {
    const auto& lb = std::get<LoopKey>(b);
    if (int c = cmp_long(la->deg, lb.deg)) return c;
    return finite_key_cmp(la->inner, lb.inner);
  }
  FiniteKey fa = std::visit(
      [](const auto& v) -> FiniteKey {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, LoopKey>)
          throw std::logic_error("unreachable");
        else
          return v;
      },
      a);
  FiniteKey fb = std::visit(
      [](const auto& v) -> FiniteKey {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, LoopKey>)
          throw std::logic_error("unreachable");
        else
          return v;
      },
      b);
  return finite_key_cmp(fa, fb);
}

struct KeyLess {
  bool operator()(const BasisKey& a, const BasisKey& b) const {
    return key_cmp(a, b) < 0;
  }
};

inline bool operator==(const LoopKey& a, const LoopKey& b) {
  return a.deg == b.deg && finite_key_cmp(a.inner, b.inner) == 0;
}
inline bool key_eq(const BasisKey& a, const BasisKey& b) {
  return key_cmp(a, b) == 0;
}

inline bool is_central(const BasisKey& k) {
  if (std::holds_alternative<Central>(k)) return true;
  if (const auto* lk = std::get_if<LoopKey>(&k))
    return std::holds_alternative<Central>(lk->inner);
  return false;
}

inline BasisKey loop(const BasisKey& inner, long deg) {
  if (const auto* lk = std::get_if<LoopKey>(&inner)) {
    (void)lk;
    throw std::invalid_argument("loop: nested loop keys are not supported");
  }
  FiniteKey f = std::visit(
      [](const auto& v) -> FiniteKey {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, LoopKey>)
          throw std::logic_error("unreachable");
        else
          return v;
      },
      inner);
  return LoopKey{f, deg};
}

inline std::string central_str(Central c) {
  switch (c) {
    case Central::C1: return "c1";
    case Central::C2: return "c2";
    case Central::K1: return "K1";
    case Central::K2: return "K2";
    case Central::C1Bar: return "c1bar";
  }
  return "?";
}

inline std::string key_str(const BasisKey& k) {
  struct V {
    std::string operator()(const EKey& e) const {
      return "E[" + std::to_string(e.k) + "," + std::to_string(e.l) + "]";
    }
    std::string operator()(const EijKey& e) const {
      return "Eij[" + std::to_string(e.m) + "," + std::to_string(e.n) + "]";
    }
    std::string operator()(const GKey& g) const {
      return "G[" + std::to_string(g.alpha) + "," + std::to_string(g.m) + "]";
    }
    std::string operator()(const GbarKey& g) const {
      return "Gbar[" + std::to_string(g.alpha) + "," + std::to_string(g.m) + "]";
    }
    std::string operator()(Central c) const { return central_str(c); }
    std::string operator()(const LoopKey& l) const {
      BasisKey inner = std::visit([](const auto& v) -> BasisKey { return v; }, l.inner);
      return "(" + key_str(inner) + ")@t^" + std::to_string(l.deg);
    }
  };
  return std::visit(V{}, k);
}

/// The mode grade used by induction splittings: the l-index of E_{k,l} and
/// the t-degree of loop elements. Central and bare finite keys grade 0.
inline long key_grade(const BasisKey& k) {
  if (const auto* e = std::get_if<EKey>(&k)) return e->l;
  if (const auto* l = std::get_if<LoopKey>(&k)) return l->deg;
  return 0;
}

/// Canonical creation order for PBW monomials: by grade, then the full key
/// order. Any total order yields a PBW basis; fixing this one makes normal
/// forms reproducible.
inline bool creation_less(const BasisKey& a, const BasisKey& b) {
  if (long ga = key_grade(a), gb = key_grade(b); ga != gb) return ga < gb;
  return key_cmp(a, b) < 0;
}

}  // namespace qdo
