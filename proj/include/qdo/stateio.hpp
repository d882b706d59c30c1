#pragma once

// Text and JSON forms of PBW states. A state expression is a sum of terms
//
//   [scalar *] KEY KEY ... v     (or vac; v3 addresses bottom basis vectors)
//
// with the keys applied right-to-left to the bottom vector. Parsing goes
// through the straightening engine, so any word is accepted and lands in
// normal form; printing normal forms round-trips.

#include <qdo/jsonio.hpp>
#include <qdo/pbw.hpp>
#include <qdo/text.hpp>

namespace qdo {

inline PBWState parse_state(const InductionSpec& S, const std::string& text) {
  Cursor c(text);
  PBWState out;
  if (c.at_end()) c.fail("empty state");
  if (c.peek() == '0') {
    size_t save = c.pos();
    c.eat('0');
    if (c.at_end()) return out;
    c.seek(save);
  }
  bool neg = c.try_eat('-');
  while (true) {
    QLaurent coef(1);
    // scalar prefix factors, each followed by '*'
    while (true) {
      size_t save = c.pos();
      BasisKey probe;
      if (try_parse_key(c, probe)) {
        c.seek(save);
        break;
      }
      char p = c.peek();
      if (p == 'v') break;  // bottom symbol
      coef *= detail::parse_scalar_factor(c);
      c.eat('*');
    }
    // generator keys, whitespace separated
    std::vector<BasisKey> keys;
    BasisKey k;
    while (try_parse_key(c, k)) keys.push_back(fit_key(k, S.algebra));
    // bottom reference
    std::string id = c.ident();
    int index = 0;
    if (id == "vac" || id == "v") {
      index = 0;
    } else if (id.size() > 1 && id[0] == 'v') {
      index = std::stoi(id.substr(1));
    } else {
      c.fail("expected bottom symbol 'v' or 'vac'");
    }
    if (index < 0 || index >= S.bottom.dim) c.fail("bottom index out of range");
    if (neg) coef = -coef;

    PBWState term = coef * PBWState::bottom_vector(index);
    for (auto it = keys.rbegin(); it != keys.rend(); ++it)
      term = act(S, basis(*it), term);
    out += term;

    if (c.try_eat('+')) {
      neg = false;
    } else if (c.try_eat('-')) {
      neg = true;
    } else {
      break;
    }
  }
  if (!c.at_end()) c.fail("trailing input after state");
  return out;
}

inline std::string state_str(const InductionSpec& S, const PBWState& w) {
  if (w.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [term, c] : w.terms()) {
    bool neg = false;
    std::string body = coeff_prefix(c, neg);
    for (const auto& k : term.monomial) body += key_str(k) + " ";
    if (term.bottom.stuck) body += key_str(*term.bottom.stuck) + " ";
    if (S.bottom.dim > 1)
      body += "v" + std::to_string(term.bottom.index);
    else
      body += S.bottom_symbol;
    if (first) {
      out += (neg ? "-" : "") + body;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
  }
  return out;
}

inline Json state_to_json(const InductionSpec& S, const PBWState& w) {
  Json terms = Json::array();
  for (const auto& [term, c] : w.terms()) {
    Json monomial = Json::array();
    for (const auto& k : term.monomial) monomial.push_back(key_str(k));
    Json t{{"monomial", monomial}, {"bottom", term.bottom.index},
           {"coef", scalar_to_json(c)}};
    if (term.bottom.stuck) t["stuck"] = key_str(*term.bottom.stuck);
    terms.push_back(t);
  }
  return Json{{"terms", terms}, {"depth", state_depth(w)}, {"bottom_symbol", S.bottom_symbol}};
}

// ---- bottom-module spec files -------------------------------------------
//
// {algebra, levels: {l1, l2}, cutoff_t, dim, action: [{key, matrix}]}
// Matrix entries are scalar text; levels are scalar text.

inline InductionSpec spec_from_json(const Json& j) {
  std::string alg = j.at("algebra").get<std::string>();
  QLaurent l1 = parse_scalar(j.at("levels").at("l1").get<std::string>());
  QLaurent l2 = parse_scalar(j.at("levels").at("l2").get<std::string>());
  long cutoff = j.at("cutoff_t").get<long>();
  int dim = j.value("dim", 1);

  if (alg == "tilde-A" || alg == "hat-A") {
    if (dim != 1 || (j.contains("action") && !j.at("action").empty()))
      throw std::invalid_argument("vacuum specs take a trivial one-dimensional bottom");
    return make_vacuum(alg, l1, l2);
  }
  if (alg != "vq") throw std::invalid_argument("unsupported induction algebra: " + alg);

  std::map<BasisKey, Matrix, KeyLess> table;
  if (j.contains("action")) {
    for (const auto& entry : j.at("action")) {
      std::string key_text = entry.at("key").get<std::string>();
      Cursor c(key_text);
      BasisKey k;
      if (!try_parse_key(c, k) || !c.at_end())
        throw std::invalid_argument("bad action key " + key_text);
      if (key_grade(k) < 0 || key_grade(k) > cutoff)
        throw std::invalid_argument("action key " + key_str(k) +
                                    " outside the bottom range [0, cutoff_t]");
      const auto& rows = entry.at("matrix");
      if (static_cast<int>(rows.size()) != dim)
        throw std::invalid_argument("matrix for " + key_str(k) + " is not dim x dim");
      Matrix M(dim, std::vector<QLaurent>(dim));
      for (int r = 0; r < dim; ++r) {
        if (static_cast<int>(rows[r].size()) != dim)
          throw std::invalid_argument("matrix for " + key_str(k) + " is not dim x dim");
        for (int cix = 0; cix < dim; ++cix)
          M[r][cix] = parse_scalar(rows[r][cix].get<std::string>());
      }
      table.emplace(k, std::move(M));
    }
  }
  if (cutoff == 0) return make_verma(l1, l2, std::move(table), dim);
  return make_ind(l1, l2, cutoff, std::move(table), dim);
}

inline Json spec_to_json(const InductionSpec& S) {
  Json action = Json::array();
  for (const auto& [k, M] : S.bottom.action) {
    Json rows = Json::array();
    for (const auto& row : M) {
      Json r = Json::array();
      for (const auto& e : row) r.push_back(e.str());
      rows.push_back(r);
    }
    action.push_back(Json{{"key", key_str(k)}, {"matrix", rows}});
  }
  return Json{{"algebra", S.algebra.name},
              {"levels", Json{{"l1", S.l1.str()}, {"l2", S.l2.str()}}},
              {"cutoff_t", S.bottom.cutoff},
              {"dim", S.bottom.dim},
              {"action", action}};
}

}  // namespace qdo
