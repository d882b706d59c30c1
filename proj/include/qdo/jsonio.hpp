#pragma once

// JSON mirrors of the text forms. Scalars serialize as
// [[exponent, "numerator", "denominator"], ...] sorted by exponent, with
// the integer parts as decimal strings so arbitrary precision round-trips
// exactly.

#include <qdo/text.hpp>

#include <json.hpp>

namespace qdo {

using Json = nlohmann::ordered_json;

inline Json scalar_to_json(const QLaurent& s) {
  Json out = Json::array();
  for (const auto& [e, c] : s.terms())
    out.push_back(Json::array({e, numerator(c).str(), denominator(c).str()}));
  return out;
}

inline QLaurent scalar_from_json(const Json& j) {
  QLaurent out;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3)
      throw std::invalid_argument("scalar JSON: expected [exp, num, den] triples");
    long e = t[0].get<long>();
    BigInt num(t[1].get<std::string>());
    BigInt den(t[2].get<std::string>());
    if (den <= 0) throw std::invalid_argument("scalar JSON: denominator must be positive");
    out.add(e, Rational(num, den));
  }
  return out;
}

inline Json elem_to_json(const LieElem& x) {
  Json terms = Json::array();
  for (const auto& [k, c] : x.terms())
    terms.push_back(Json{{"key", key_str(k)}, {"coef", scalar_to_json(c)}});
  return Json{{"terms", terms}};
}

inline LieElem elem_from_json(const Json& j, const AlgebraSpec& A) {
  LieElem out;
  for (const auto& t : j.at("terms")) {
    std::string key_text = t.at("key").get<std::string>();
    Cursor c(key_text);
    BasisKey k;
    if (!try_parse_key(c, k) || !c.at_end())
      throw std::invalid_argument("element JSON: bad key " + key_text);
    out.add(fit_key(k, A), scalar_from_json(t.at("coef")));
  }
  return out;
}

}  // namespace qdo
