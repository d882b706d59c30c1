#pragma once

// Laurent polynomials in the formal variable q with rational coefficients.
// This ring is the universal scalar of the library: every structure constant
// is a QLaurent, and "q is not a root of unity" is automatic because a
// nonzero Laurent polynomial is never the zero scalar.

#include <qdo/rational.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace qdo {

class QLaurent {
 public:
  // Canonical form invariant: no stored coefficient is zero.
  using Terms = std::map<long, Rational>;

  QLaurent() = default;
  QLaurent(long c) { add(0, Rational(c)); }             // NOLINT(runtime/explicit)
  QLaurent(const Rational& c) { add(0, c); }            // NOLINT(runtime/explicit)

  /// Monomial c * q^n.
  static QLaurent monomial(const Rational& c, long n) {
    QLaurent out;
    out.add(n, c);
    return out;
  }

  /// q^n.
  static QLaurent q_pow(long n) { return monomial(Rational(1), n); }

  bool is_zero() const { return terms_.empty(); }

  /// True iff exactly one term (a nonzero scalar monomial c*q^n).
  bool is_monomial() const { return terms_.size() == 1; }

  const Terms& terms() const { return terms_; }

  void add(long exp, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
      terms_.emplace(exp, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  QLaurent& operator+=(const QLaurent& o) {
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
  }
  QLaurent& operator-=(const QLaurent& o) {
    for (const auto& [e, c] : o.terms_) add(e, -c);
    return *this;
  }
  QLaurent operator-() const {
    QLaurent out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }
  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }

  friend QLaurent operator*(const QLaurent& a, const QLaurent& b) {
    QLaurent out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add(ea + eb, ca * cb);
    return out;
  }
  QLaurent& operator*=(const QLaurent& o) { return *this = *this * o; }

  friend bool operator==(const QLaurent& a, const QLaurent& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const QLaurent& a, const QLaurent& b) {
    return !(a == b);
  }
  friend bool operator<(const QLaurent& a, const QLaurent& b) {
    return a.terms_ < b.terms_;
  }

  /// a^e for integer e; a must be a monomial when e < 0 (only q-power
  /// inverses exist in the Laurent ring).
  QLaurent pow(long e) const {
    if (e == 0) return QLaurent(1);
    if (is_zero()) {
      if (e < 0) throw std::invalid_argument("QLaurent::pow: zero to a negative power");
      return QLaurent();
    }
    if (e < 0) {
      if (!is_monomial())
        throw std::invalid_argument("QLaurent::pow: negative power of a non-monomial");
      const auto& [n, c] = *terms_.begin();
      return monomial(rat_pow(c, e), n * e);
    }
    QLaurent acc(1), base = *this;
    unsigned long n = static_cast<unsigned long>(e);
    while (n > 0) {
      if (n & 1UL) acc *= base;
      base *= base;
      n >>= 1;
    }
    return acc;
  }

  /// Exact value at q = r. Rejects r in {0, 1, -1}: substituting a root of
  /// unity (or 0) would break the genericity the formal variable encodes.
  Rational eval_at(const Rational& r) const {
    if (r == 0 || r == 1 || r == -1)
      throw std::invalid_argument("QLaurent::eval_at: q must be generic (not 0, 1 or -1)");
    Rational out(0);
    for (const auto& [e, c] : terms_) out += c * rat_pow(r, e);
    return out;
  }

  long min_exp() const { return terms_.begin()->first; }
  long max_exp() const { return terms_.rbegin()->first; }

  /// Text form: "c*q^n" terms in increasing exponent order; the exponent-0
  /// term prints as a bare rational. Zero prints as "0".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Rational a = c;
      if (first) {
        first = false;
      } else if (a < 0) {
        out += " - ";
        a = -a;
      } else {
        out += " + ";
      }
      if (e == 0) {
        out += rat_str(a);
      } else {
        out += rat_str(a) + "*q^" + std::to_string(e);
      }
    }
    return out;
  }

 private:
  Terms terms_;
};

inline QLaurent q_pow(long n) { return QLaurent::q_pow(n); }

}  // namespace qdo
