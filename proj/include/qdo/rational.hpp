#pragma once

// Exact rational scalars. Arbitrary-precision integers keep every identity
// in the library exact; nothing in qdo ever touches floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace qdo {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// r^e for integer e (negative exponents invert; 0^negative throws).
inline Rational rat_pow(const Rational& r, long e) {
  if (e == 0) return Rational(1);
  if (r == 0) {
    if (e < 0) throw std::invalid_argument("rat_pow: 0 to a negative power");
    return Rational(0);
  }
  Rational base = r;
  bool invert = e < 0;
  unsigned long n = invert ? static_cast<unsigned long>(-(e + 1)) + 1UL
                           : static_cast<unsigned long>(e);
  Rational acc(1);
  while (n > 0) {
    if (n & 1UL) acc *= base;
    base *= base;
    n >>= 1;
  }
  if (invert) acc = Rational(1) / acc;
  return acc;
}

/// Canonical text form: "p" or "p/r" with r > 0.
inline std::string rat_str(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

}  // namespace qdo
