#pragma once

// Text grammar for scalars, keys and elements.
//
//   scalar  := ['-'] sterm (('+'|'-') sterm)*
//   sterm   := sfactor ('*' sfactor)*
//   sfactor := INT ['/' UINT] | 'q' ['^' INT] | '(' scalar ')'
//   key     := 'E' '[' INT ',' INT ']' | 'Eij' [...] | 'G' [...] | 'Gbar' [...]
//            | 'c1' | 'c2' | 'c1bar' | 'K1' | 'K2' | '(' key ')@t^' INT
//   element := ['-'] eterm (('+'|'-') eterm)*;  eterm is a '*'-joined product
//              of scalar factors containing exactly one key.
//
// Parse errors carry the offending position.

#include <qdo/catalogue.hpp>

#include <cctype>
#include <stdexcept>
#include <string>

namespace qdo {

struct ParseError : std::runtime_error {
  size_t pos;
  ParseError(const std::string& msg, size_t p)
      : std::runtime_error(msg + " (at position " + std::to_string(p) + ")"), pos(p) {}
};

class Cursor {
 public:
  explicit Cursor(std::string s) : s_(std::move(s)) {}

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool at_end() {
    skip_ws();
    return i_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool try_eat(char c) {
    skip_ws();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  void eat(char c) {
    if (!try_eat(c)) fail(std::string("expected '") + c + "'");
  }
  size_t pos() const { return i_; }
  void seek(size_t p) { i_ = p; }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, i_); }

  /// Maximal [A-Za-z][A-Za-z0-9]* identifier, or empty.
  std::string ident() {
    skip_ws();
    size_t j = i_;
    if (j < s_.size() && std::isalpha(static_cast<unsigned char>(s_[j]))) {
      ++j;
      while (j < s_.size() && std::isalnum(static_cast<unsigned char>(s_[j]))) ++j;
    }
    std::string out(s_.substr(i_, j - i_));
    i_ = j;
    return out;
  }

  long integer() {
    skip_ws();
    size_t start = i_;
    bool neg = false;
    if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) {
      neg = s_[i_] == '-';
      ++i_;
    }
    if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
      fail("expected integer");
    long v = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      v = v * 10 + (s_[i_] - '0');
      ++i_;
    }
    (void)start;
    return neg ? -v : v;
  }

  BigInt big_integer() {
    skip_ws();
    std::string digits;
    if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) {
      if (s_[i_] == '-') digits += '-';
      ++i_;
    }
    if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
      fail("expected integer");
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      digits += s_[i_];
      ++i_;
    }
    return BigInt(digits);
  }

 private:
  std::string s_;
  size_t i_ = 0;
};

namespace detail {

inline QLaurent parse_scalar_expr(Cursor& c);

/// One scalar factor: rational, q-power, or parenthesized expression.
inline QLaurent parse_scalar_factor(Cursor& c) {
  char p = c.peek();
  if (p == '(') {
    c.eat('(');
    QLaurent v = parse_scalar_expr(c);
    c.eat(')');
    return v;
  }
  if (p == 'q') {
    c.eat('q');
    long e = 1;
    if (c.try_eat('^')) e = c.integer();
    return q_pow(e);
  }
  BigInt num = c.big_integer();
  BigInt den = 1;
  if (c.try_eat('/')) {
    den = c.big_integer();
    if (den <= 0) c.fail("denominator must be positive");
  }
  return QLaurent(Rational(num, den));
}

inline QLaurent parse_scalar_term(Cursor& c) {
  QLaurent v = parse_scalar_factor(c);
  while (c.try_eat('*')) v *= parse_scalar_factor(c);
  return v;
}

inline QLaurent parse_scalar_expr(Cursor& c) {
  bool neg = c.try_eat('-');
  QLaurent v = parse_scalar_term(c);
  if (neg) v = -v;
  while (true) {
    if (c.try_eat('+')) {
      v += parse_scalar_term(c);
    } else if (c.try_eat('-')) {
      v -= parse_scalar_term(c);
    } else {
      return v;
    }
  }
}

inline std::pair<long, long> parse_index_pair(Cursor& c) {
  c.eat('[');
  long a = c.integer();
  c.eat(',');
  long b = c.integer();
  c.eat(']');
  return {a, b};
}

}  // namespace detail

inline QLaurent parse_scalar(const std::string& text) {
  Cursor c(text);
  QLaurent v = detail::parse_scalar_expr(c);
  if (!c.at_end()) c.fail("trailing input after scalar");
  return v;
}

/// One key. Returns false (cursor restored) if the input does not start
/// with a key.
inline bool try_parse_key(Cursor& c, BasisKey& out) {
  size_t save = c.pos();
  if (c.try_eat('(')) {
    BasisKey inner;
    if (!try_parse_key(c, inner) || !c.try_eat(')') || !c.try_eat('@')) {
      c.seek(save);
      return false;
    }
    if (c.ident() != "t") c.fail("expected 't' in loop key");
    c.eat('^');
    long deg = c.integer();
    out = loop(inner, deg);
    return true;
  }
  size_t id_pos = c.pos();
  std::string id = c.ident();
  if (id == "E") {
    auto [k, l] = detail::parse_index_pair(c);
    out = EKey{k, l};
    return true;
  }
  if (id == "Eij") {
    auto [m, n] = detail::parse_index_pair(c);
    out = EijKey{m, n};
    return true;
  }
  if (id == "G") {
    auto [a, m] = detail::parse_index_pair(c);
    out = GKey{a, m};
    return true;
  }
  if (id == "Gbar") {
    auto [a, m] = detail::parse_index_pair(c);
    out = GbarKey{a, m};
    return true;
  }
  if (id == "c1") { out = Central::C1; return true; }
  if (id == "c2") { out = Central::C2; return true; }
  if (id == "c1bar") { out = Central::C1Bar; return true; }
  if (id == "K1") { out = Central::K1; return true; }
  if (id == "K2") { out = Central::K2; return true; }
  (void)id_pos;
  c.seek(save);
  return false;
}

/// Fit a raw parsed key to an algebra: Eij keys convert to G keys inside
/// A-flavored algebras when the parity constraint m+n in 2Z holds.
inline BasisKey fit_key(const BasisKey& k, const AlgebraSpec& A) {
  if (A.member(k)) return k;
  if (const auto* e = std::get_if<EijKey>(&k)) {
    BasisKey g = GKey{(e->m - e->n) / 2, (e->m + e->n) / 2};
    if ((e->m + e->n) % 2 == 0 && A.member(g)) return g;
    if (A.member(BasisKey(GKey{})))
      throw std::invalid_argument("key " + key_str(k) +
                                  " violates the parity constraint of algebra " + A.name);
  }
  throw std::invalid_argument("unknown key kind " + key_str(k) + " for algebra " + A.name);
}

/// element := ['-'] eterm (('+'|'-') eterm)*, each eterm a '*'-product of
/// scalar factors with exactly one key.
inline LieElem parse_element(const std::string& text, const AlgebraSpec& A) {
  Cursor c(text);
  LieElem out;
  if (c.at_end()) c.fail("empty element");
  // A bare "0" is the zero element.
  if (c.peek() == '0') {
    size_t save = c.pos();
    c.eat('0');
    if (c.at_end()) return out;
    c.seek(save);
  }
  bool neg = c.try_eat('-');
  while (true) {
    QLaurent coef(1);
    bool have_key = false;
    BasisKey key = Central::C1;
    while (true) {
      BasisKey k;
      if (try_parse_key(c, k)) {
        if (have_key) c.fail("more than one basis key in a term");
        have_key = true;
        key = k;
      } else {
        coef *= detail::parse_scalar_factor(c);
      }
      if (!c.try_eat('*')) break;
    }
    if (!have_key) c.fail("expected a basis key in term");
    if (neg) coef = -coef;
    out.add(fit_key(key, A), coef);
    if (c.try_eat('+')) {
      neg = false;
    } else if (c.try_eat('-')) {
      neg = true;
    } else {
      break;
    }
  }
  if (!c.at_end()) c.fail("trailing input after element");
  return out;
}

// ---- printing ----------------------------------------------------------

/// Scalar coefficient as a prefix factor: "" for 1, "2 * " for 2,
/// "(1*q^-1 - 1*q^1) * " for compound scalars. `neg` receives the sign
/// pulled out of single-term coefficients.
inline std::string coeff_prefix(const QLaurent& c, bool& neg) {
  neg = false;
  if (c.is_monomial()) {
    auto [e, a] = *c.terms().begin();
    Rational abs_a = a;
    if (a < 0) {
      neg = true;
      abs_a = -a;
    }
    if (e == 0 && abs_a == 1) return "";
    return QLaurent::monomial(abs_a, e).str() + " * ";
  }
  return "(" + c.str() + ") * ";
}

inline std::string elem_str(const LieElem& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : x.terms()) {
    bool neg = false;
    std::string part = coeff_prefix(c, neg) + key_str(k);
    if (first) {
      out += (neg ? "-" : "") + part;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + part;
    }
  }
  return out;
}

}  // namespace qdo
