#pragma once

// Finitely supported linear combinations of basis keys over QLaurent.

#include <qdo/keys.hpp>
#include <qdo/qlaurent.hpp>

#include <map>
#include <string>

namespace qdo {

class LieElem {
 public:
  using Terms = std::map<BasisKey, QLaurent, KeyLess>;

  LieElem() = default;

  /// Single basis key. E[0,0] normalizes to the zero element here, at
  /// construction time — the single enforcement point for that relation.
  static LieElem basis(const BasisKey& k) {
    LieElem out;
    out.add(k, QLaurent(1));
    return out;
  }

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }

  void add(const BasisKey& k, const QLaurent& c) {
    if (c.is_zero()) return;
    if (const auto* e = std::get_if<EKey>(&k); e && e->k == 0 && e->l == 0)
      return;  // E_{0,0} = 0
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  LieElem& operator+=(const LieElem& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LieElem& operator-=(const LieElem& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  friend LieElem operator+(LieElem a, const LieElem& b) { return a += b; }
  friend LieElem operator-(LieElem a, const LieElem& b) { return a -= b; }
  LieElem operator-() const {
    LieElem out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
  }

  friend LieElem operator*(const QLaurent& s, const LieElem& x) {
    LieElem out;
    for (const auto& [k, c] : x.terms_) out.add(k, s * c);
    return out;
  }

  friend bool operator==(const LieElem& a, const LieElem& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LieElem& a, const LieElem& b) { return !(a == b); }

  /// Coefficient of a key (zero if absent).
  QLaurent coeff(const BasisKey& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? QLaurent() : it->second;
  }

  /// a (x) t^deg applied termwise; central summands loop too (K1 (x) t^i is
  /// a legal central key of the starred affinization).
  LieElem tensor_t(long deg) const {
    LieElem out;
    for (const auto& [k, c] : terms_) out.add(loop(k, deg), c);
    return out;
  }

 private:
  Terms terms_;
};

inline LieElem basis(const BasisKey& k) { return LieElem::basis(k); }

inline LieElem E(long k, long l) { return LieElem::basis(EKey{k, l}); }
inline LieElem Eij(long m, long n) { return LieElem::basis(EijKey{m, n}); }
inline LieElem G(long alpha, long m) { return LieElem::basis(GKey{alpha, m}); }
inline LieElem Gbar(long alpha, long m) { return LieElem::basis(GbarKey{alpha, m}); }
inline LieElem central(Central c) { return LieElem::basis(c); }

}  // namespace qdo
