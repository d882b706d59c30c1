// qdo: exact computer algebra for the q-difference operator algebra, its
// covariant realization, related affine Lie algebras, and their induced
// modules. All arithmetic is exact over Laurent polynomials in q with
// rational coefficients; all checks are identities, not approximations.
//
// Exit codes: 0 all checks passed, 1 property failure, 2 usage/parse error.

#include <qdo/fuzz.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace qdo;

namespace {

std::pair<long, long> parse_range(const std::string& text) {
  size_t dots = text.find("..");
  if (dots == std::string::npos)
    throw std::invalid_argument("expected a range of the form a..b, got: " + text);
  return {std::stol(text.substr(0, dots)), std::stol(text.substr(dots + 2))};
}

std::map<std::string, long> parse_params(const std::string& text) {
  std::map<std::string, long> out;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string item = text.substr(pos, comma - pos);
    size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("expected name=value in --params, got: " + item);
    out[item.substr(0, eq)] = std::stol(item.substr(eq + 1));
    pos = comma + 1;
  }
  return out;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return Json::parse(in);
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int finish_report(const CheckReport& rep) {
  emit(rep.to_json());
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in q-difference operator algebras and their modules"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string output = "text";
  app.add_option("--output", output, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  uint64_t seed = 1;
  app.add_option("--seed", seed, "seed for randomized sampling");

  // ---- bracket -----------------------------------------------------------
  auto* c_bracket = app.add_subcommand("bracket", "Lie bracket of two elements");
  std::string br_alg = "vq", br_x, br_y;
  c_bracket->add_option("--algebra", br_alg, "catalogue name")->required();
  c_bracket->add_option("x", br_x, "first element")->required();
  c_bracket->add_option("y", br_y, "second element")->required();

  // ---- form --------------------------------------------------------------
  auto* c_form = app.add_subcommand("form", "invariant bilinear form of two elements");
  std::string fo_alg, fo_x, fo_y;
  c_form->add_option("--algebra", fo_alg)->required();
  c_form->add_option("x", fo_x)->required();
  c_form->add_option("y", fo_y)->required();

  // ---- reduce ------------------------------------------------------------
  auto* c_reduce = app.add_subcommand(
      "reduce", "canonical covariant form of a loop element of hat-A-star");
  std::string rd_x;
  c_reduce->add_option("x", rd_x)->required();

  // ---- act ---------------------------------------------------------------
  auto* c_act = app.add_subcommand("act", "apply a generator to an induced-module state");
  std::string act_spec, act_gen, act_state;
  c_act->add_option("--spec", act_spec, "bottom-module spec file (JSON)")->required();
  c_act->add_option("--gen", act_gen, "algebra element to apply")->required();
  c_act->add_option("--state", act_state, "state expression")->required();

  // ---- bound -------------------------------------------------------------
  auto* c_bound = app.add_subcommand(
      "bound", "verified annihilation bound t: E[k,l] kills the state for l >= t");
  std::string bd_spec, bd_state, bd_ks = "-4..4";
  long bd_margin = 3;
  c_bound->add_option("--spec", bd_spec)->required();
  c_bound->add_option("--state", bd_state)->required();
  c_bound->add_option("--k", bd_ks, "range of k samples, a..b");
  c_bound->add_option("--margin", bd_margin, "how far above t to verify");

  // ---- fuzz --------------------------------------------------------------
  auto* c_fuzz = app.add_subcommand("fuzz", "randomized property checks");
  std::string fz_target, fz_alg = "vq", fz_spec;
  long fz_window = 3, fz_trials = 500;
  c_fuzz->add_option("--target", fz_target,
                     "jacobi|cocycle|trivial|invariance|iso|module-axiom")
      ->required();
  c_fuzz->add_option("--algebra", fz_alg);
  c_fuzz->add_option("--window", fz_window, "index window for sampled keys");
  c_fuzz->add_option("--trials", fz_trials);
  c_fuzz->add_option("--spec", fz_spec, "spec file for module-axiom fuzzing");

  // ---- gf-check ----------------------------------------------------------
  auto* c_gf = app.add_subcommand("gf-check",
                                  "coefficient-by-coefficient generating-function identity");
  std::string gf_identity, gf_params, gf_window = "-5..5";
  c_gf->add_option("identity", gf_identity, "eq2.5|eq3.8|eq4.2|eq4.3|eq4.4")->required();
  c_gf->add_option("--params", gf_params, "identity parameters, e.g. k=1,r=0")->required();
  c_gf->add_option("--window", gf_window, "mode window a..b");

  // ---- verify ------------------------------------------------------------
  auto* c_verify = app.add_subcommand("verify", "deterministic verification sweeps");
  std::string vf_target, vf_spec;
  long vf_window = 3, vf_trials = 200, vf_degree = 3;
  c_verify
      ->add_option("--target", vf_target,
                   "theta|ext-iso|support-lemma|phi|quasi-local|grading|restrictedness|bottom")
      ->required();
  c_verify->add_option("--window", vf_window);
  c_verify->add_option("--trials", vf_trials);
  c_verify->add_option("--degree", vf_degree, "state degree bound for phi");
  c_verify->add_option("--spec", vf_spec, "spec file for bottom consistency");

  // ---- report ------------------------------------------------------------
  auto* c_report = app.add_subcommand("report", "run the whole verification battery");
  long rp_trials = 200, rp_window = 3;
  c_report->add_option("--trials", rp_trials);
  c_report->add_option("--window", rp_window);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*c_bracket) {
      const AlgebraSpec& A = algebra(br_alg);
      LieElem r = bracket(A, parse_element(br_x, A), parse_element(br_y, A));
      if (output == "json")
        emit(Json{{"algebra", br_alg}, {"text", elem_str(r)}, {"element", elem_to_json(r)}});
      else
        std::cout << elem_str(r) << "\n";
      return 0;
    }
    if (*c_form) {
      const AlgebraSpec& A = algebra(fo_alg);
      QLaurent r = form(A, parse_element(fo_x, A), parse_element(fo_y, A));
      if (output == "json")
        emit(Json{{"algebra", fo_alg}, {"text", r.str()}, {"scalar", scalar_to_json(r)}});
      else
        std::cout << r.str() << "\n";
      return 0;
    }
    if (*c_reduce) {
      // accept both raw loop elements and already-canonical covariant keys
      AlgebraSpec domain = algebra("hat-A-star");
      const AlgebraSpec& cov = algebra("vq-cov");
      auto star_member = domain.member;
      auto cov_member = cov.member;
      domain.member = [star_member, cov_member](const BasisKey& k) {
        return star_member(k) || cov_member(k);
      };
      LieElem r = covariant_reduce(parse_element(rd_x, domain));
      if (output == "json")
        emit(Json{{"text", elem_str(r)}, {"element", elem_to_json(r)}});
      else
        std::cout << elem_str(r) << "\n";
      return 0;
    }
    if (*c_act) {
      InductionSpec S = spec_from_json(load_json_file(act_spec));
      PBWState w = parse_state(S, act_state);
      PBWState r = act(S, parse_element(act_gen, S.algebra), w);
      if (output == "json")
        emit(Json{{"text", state_str(S, r)}, {"state", state_to_json(S, r)}});
      else
        std::cout << state_str(S, r) << "\n";
      return 0;
    }
    if (*c_bound) {
      InductionSpec S = spec_from_json(load_json_file(bd_spec));
      PBWState w = parse_state(S, bd_state);
      auto [klo, khi] = parse_range(bd_ks);
      std::vector<long> ks;
      for (long k = klo; k <= khi; ++k) ks.push_back(k);
      long t = restrictedness_bound(S, w, ks, bd_margin);
      Json j{{"state", state_str(S, w)}, {"depth", state_depth(w)},
             {"cutoff_t", S.bottom.cutoff}, {"bound", t},
             {"verified_k", bd_ks}, {"verified_l", std::to_string(t) + ".." +
                                                      std::to_string(t + bd_margin)}};
      if (output == "json")
        emit(j);
      else
        std::cout << "t = " << t << " (E[k,l] annihilates the state for all sampled k, l >= t)\n";
      return 0;
    }
    if (*c_fuzz) {
      CheckReport rep;
      if (fz_target == "module-axiom" && !fz_spec.empty()) {
        InductionSpec S = spec_from_json(load_json_file(fz_spec));
        rep = fuzz_module_axiom(S, fz_window, fz_trials, seed);
      } else {
        rep = run_fuzz(fz_target, fz_alg, fz_window, fz_trials, seed);
      }
      return finish_report(rep);
    }
    if (*c_gf) {
      auto [lo, hi] = parse_range(gf_window);
      GfReport rep = check_gf_identity(gf_identity, parse_params(gf_params), lo, hi);
      Json mism = Json::array();
      for (const auto& m : rep.mismatches)
        mism.push_back(Json{{"e1", m.e1}, {"e2", m.e2}, {"lhs", m.lhs}, {"rhs", m.rhs}});
      Json p;
      for (const auto& [k, v] : rep.params) p[k] = v;
      emit(Json{{"identity", rep.identity},
                {"params", p},
                {"window", Json::array({rep.mode_lo, rep.mode_hi})},
                {"cells", rep.cells},
                {"mismatches", mism}});
      return rep.ok() ? 0 : 1;
    }
    if (*c_verify) {
      if (vf_target == "theta") return finish_report(verify_theta(vf_window));
      if (vf_target == "ext-iso") return finish_report(verify_ext_iso(vf_trials, seed));
      if (vf_target == "support-lemma")
        return finish_report(verify_support(2, 3, 3));
      if (vf_target == "phi")
        return finish_report(verify_phi(
            vf_degree, vf_trials, seed,
            {{QLaurent(0), QLaurent(2)},
             {QLaurent(1), QLaurent(1)},
             {QLaurent(Rational(1, 2)), q_pow(1)}}));
      if (vf_target == "quasi-local")
        return finish_report(verify_quasilocal(vf_trials, 5, seed));
      if (vf_target == "grading") return finish_report(verify_grading(vf_trials, seed));
      if (vf_target == "restrictedness")
        return finish_report(verify_restrictedness(vf_trials, seed));
      if (vf_target == "bottom") {
        if (vf_spec.empty())
          throw std::invalid_argument("verify --target bottom needs --spec FILE");
        InductionSpec S = spec_from_json(load_json_file(vf_spec));
        ConsistencyReport rep = check_bottom_consistency(S, vf_window);
        Json v = Json::array();
        for (const auto& s : rep.violations) v.push_back(s);
        emit(Json{{"target", "bottom"}, {"consistent", rep.consistent}, {"violations", v}});
        return rep.consistent ? 0 : 1;
      }
      throw std::invalid_argument("unknown verify target: " + vf_target);
    }
    if (*c_report) {
      Json checks = Json::array();
      bool all_ok = true;
      auto run = [&](const CheckReport& rep) {
        checks.push_back(rep.to_json());
        all_ok = all_ok && rep.ok();
      };
      for (const auto& name : {"vq", "gl-inf", "A", "A-star", "hat-A", "hat-A-star",
                               "tilde-A"})
        run(fuzz_jacobi(name, 4, rp_trials, seed));
      run(fuzz_cocycle("A", 4, rp_trials, seed));
      run(fuzz_cocycle("hat-A", 3, rp_trials, seed));
      run(fuzz_trivial("A", 4, rp_trials, seed));
      run(fuzz_trivial("hat-A", 3, rp_trials, seed));
      for (const auto& name : {"A", "gl-inf", "A-star"})
        run(fuzz_invariance(name, 4, rp_trials, seed));
      run(verify_ext_iso(rp_trials, seed));
      run(verify_theta(rp_window));
      run(fuzz_module_axiom(make_verma(QLaurent(0), QLaurent(1)), 3, rp_trials, seed));
      run(fuzz_module_axiom(make_vacuum("tilde-A", QLaurent(1), QLaurent(1)), 2, rp_trials,
                            seed));
      for (const auto& id : {"eq2.5", "eq3.8", "eq4.2", "eq4.3", "eq4.4"})
        run(verify_gf(id, std::max(10L, rp_trials / 10), -4, 4, seed));
      run(verify_quasilocal(5, 5, seed));
      run(verify_restrictedness(std::max(10L, rp_trials / 4), seed));
      run(verify_support(2, 2, 2));
      run(verify_phi(3, std::max(20L, rp_trials / 4), seed,
                     {{QLaurent(0), QLaurent(2)},
                      {QLaurent(1), QLaurent(1)},
                      {QLaurent(Rational(1, 2)), q_pow(1)}}));
      run(verify_grading(std::max(20L, rp_trials / 4), seed));
      emit(Json{{"all_passed", all_ok}, {"checks", checks}});
      return all_ok ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
