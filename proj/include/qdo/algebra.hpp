#pragma once

// A Lie algebra instance is its name plus structure-constant rules on basis
// keys. One generic bilinear engine evaluates brackets, forms and cocycles
// for every instance in the catalogue.

#include <qdo/element.hpp>

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

namespace qdo {

using BracketRule = std::function<LieElem(const BasisKey&, const BasisKey&)>;
using ScalarRule = std::function<QLaurent(const BasisKey&, const BasisKey&)>;
using KeyPred = std::function<bool(const BasisKey&)>;

struct AlgebraSpec {
  std::string name;
  BracketRule bracket_rule;
  std::optional<ScalarRule> form_rule;
  std::optional<ScalarRule> cocycle_rule;
  KeyPred member;

  bool has_form() const { return form_rule.has_value(); }

  void require_member(const LieElem& x) const {
    for (const auto& [k, c] : x.terms()) {
      (void)c;
      if (!member(k))
        throw std::invalid_argument("key " + key_str(k) + " does not belong to algebra " + name);
    }
  }
};

/// Bilinear extension of the bracket rule. Central keys bracket to zero
/// without consulting the rule.
inline LieElem bracket(const AlgebraSpec& A, const LieElem& x, const LieElem& y) {
  A.require_member(x);
  A.require_member(y);
  LieElem out;
  for (const auto& [kx, cx] : x.terms()) {
    if (is_central(kx)) continue;
    for (const auto& [ky, cy] : y.terms()) {
      if (is_central(ky)) continue;
      out += (cx * cy) * A.bracket_rule(kx, ky);
    }
  }
  return out;
}

/// Bilinear extension of the invariant form.
inline QLaurent form(const AlgebraSpec& A, const LieElem& x, const LieElem& y) {
  if (!A.form_rule) throw std::invalid_argument("algebra " + A.name + " has no bilinear form");
  A.require_member(x);
  A.require_member(y);
  QLaurent out;
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) out += cx * cy * (*A.form_rule)(kx, ky);
  return out;
}

/// [x,[y,z]] + [y,[z,x]] + [z,[x,y]] == 0, exactly.
inline bool check_jacobi(const AlgebraSpec& A, const LieElem& x, const LieElem& y,
                         const LieElem& z) {
  LieElem s = bracket(A, x, bracket(A, y, z));
  s += bracket(A, y, bracket(A, z, x));
  s += bracket(A, z, bracket(A, x, y));
  return s.is_zero();
}

inline bool check_antisymmetry(const AlgebraSpec& A, const LieElem& x, const LieElem& y) {
  return (bracket(A, x, y) + bracket(A, y, x)).is_zero();
}

/// <[x,y],z> == <x,[y,z]>, exactly.
inline bool check_invariance(const AlgebraSpec& A, const LieElem& x, const LieElem& y,
                             const LieElem& z) {
  return form(A, bracket(A, x, y), z) == form(A, x, bracket(A, y, z));
}

inline bool check_form_symmetry(const AlgebraSpec& A, const LieElem& x, const LieElem& y) {
  return form(A, x, y) == form(A, y, x);
}

}  // namespace qdo
