#include <qdo/fuzz.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <future>
#include <vector>

using namespace qdo;

TEST_CASE("fuzz reports are deterministic for a fixed seed") {
  for (const std::string target : {"jacobi", "cocycle", "invariance"}) {
    CheckReport a = run_fuzz(target, "A", 3, 50, 42);
    CheckReport b = run_fuzz(target, "A", 3, 50, 42);
    CHECK(a.to_json().dump() == b.to_json().dump());
    CHECK(a.ok());
  }
  CHECK(run_fuzz("iso", "vq", 3, 50, 1).ok());
  CHECK(run_fuzz("trivial", "hat-A", 3, 50, 1).ok());
  CHECK(run_fuzz("module-axiom", "vq", 3, 25, 1).ok());
  CHECK(run_fuzz("module-axiom", "tilde-A", 2, 25, 1).ok());
  CHECK_THROWS_AS(run_fuzz("nope", "vq", 3, 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(run_fuzz("trivial", "vq", 3, 10, 1), std::invalid_argument);
}

TEST_CASE("sampled states respect the depth budget") {
  InductionSpec S = make_verma(QLaurent(0), QLaurent(1));
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    PBWState w = sample_state(S, 4, 3, rng);
    CHECK(state_depth(w) <= 4);
  }
}

TEST_CASE("concurrent evaluation over shared immutable specs") {
  InductionSpec S = make_verma(QLaurent(0), QLaurent(1));
  const AlgebraSpec& VQ = algebra("vq");
  std::vector<std::future<bool>> jobs;
  for (int t = 0; t < 8; ++t) {
    jobs.push_back(std::async(std::launch::async, [&, t] {
      Rng rng(1000 + t);
      for (int i = 0; i < 40; ++i) {
        LieElem x = basis(sample_key("vq", 3, rng));
        LieElem y = basis(sample_key("vq", 3, rng));
        if (!check_antisymmetry(VQ, x, y)) return false;
        PBWState w = sample_state(S, 3, 3, rng);
        if (!check_module_axiom(S, x, y, w)) return false;
      }
      return true;
    }));
  }
  for (auto& j : jobs) CHECK(j.get());
}

TEST_CASE("deterministic sweeps pass at small sizes") {
  CHECK(verify_theta(2).ok());
  CHECK(verify_ext_iso(40, 3).ok());
  CHECK(verify_support(1, 2, 2).ok());
  CHECK(verify_restrictedness(10, 3).ok());
  CHECK(verify_grading(20, 3).ok());
  CHECK(verify_quasilocal(3, 4, 3).ok());
  CHECK(verify_phi(2, 20, 3, {{QLaurent(0), QLaurent(1)}, {QLaurent(2), QLaurent(1)}}).ok());
  for (const std::string id : {"eq2.5", "eq3.8", "eq4.2", "eq4.3", "eq4.4"})
    CHECK(verify_gf(id, 5, -3, 3, 9).ok());
}
