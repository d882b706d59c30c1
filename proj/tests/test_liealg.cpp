#include <qdo/catalogue.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

using namespace qdo;

namespace {

// Uniform basis-key sampler per instance, indices in [-w, w].
BasisKey sample_key(const std::string& name, long w, std::mt19937_64& rng) {
  auto idx = [&](long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
  };
  auto nonzero_pair = [&](long& a, long& b) {
    do {
      a = idx(-w, w);
      b = idx(-w, w);
    } while (a == 0 && b == 0);
  };
  if (name == "vq") {
    if (rng() % 10 == 0) return rng() % 2 ? BasisKey(Central::C1) : BasisKey(Central::C2);
    long k, l;
    nonzero_pair(k, l);
    return EKey{k, l};
  }
  if (name == "gl-inf") return EijKey{idx(-w, w), idx(-w, w)};
  if (name == "A") return GKey{idx(-w, w), idx(-w, w)};
  if (name == "A-star" || name == "A-oplus-K1") {
    if (rng() % 10 == 0) return Central::K1;
    return GKey{idx(-w, w), idx(-w, w)};
  }
  if (name == "hat-A" || name == "hat-A-star" || name == "tilde-A" ||
      name == "hat-A-oplus-K1") {
    unsigned long roll = rng() % 10;
    if (roll == 0) return Central::K2;
    if (roll == 1) {
      if (name == "tilde-A" || name == "hat-A-oplus-K1") return Central::K1;
      if (name == "hat-A-star") return loop(Central::K1, idx(-w, w));
    }
    return loop(GKey{idx(-w, w), idx(-w, w)}, idx(-w, w));
  }
  if (name == "vq-cov") {
    if (rng() % 10 == 0) return rng() % 2 ? BasisKey(Central::C1Bar) : BasisKey(Central::K2);
    return GbarKey{idx(-w, w), idx(-w, w)};
  }
  throw std::invalid_argument("sample_key: " + name);
}

}  // namespace

TEST_CASE("vq bracket: frozen values") {
  const AlgebraSpec& A = algebra("vq");

  LieElem expected;
  expected.add(EKey{1, 1}, q_pow(-1) - q_pow(1));
  CHECK(bracket(A, E(1, 0), E(0, 1)) == expected);

  LieElem central_part = central(Central::C1) + QLaurent(2) * central(Central::C2);
  CHECK(bracket(A, E(1, 2), E(-1, -2)) == central_part);
}

TEST_CASE("E[0,0] normalizes to zero at construction") {
  CHECK(E(0, 0).is_zero());
  // [E_{1,1}, E_{-1,-1}] has no E_{0,0} term, only the central part
  const AlgebraSpec& A = algebra("vq");
  LieElem b = bracket(A, E(1, 1), E(-1, -1));
  CHECK(b == central(Central::C1) + central(Central::C2));
}

TEST_CASE("A bracket matches gl-inf through the embedding") {
  const AlgebraSpec& A = algebra("A");
  const AlgebraSpec& GL = algebra("gl-inf");

  CHECK(bracket(A, G(1, 2), G(0, 1)) == G(1, 2));
  CHECK(bracket(GL, Eij(3, 1), Eij(1, 1)) == Eij(3, 1));
  CHECK(embed_A_to_glinf(G(1, 2)) == Eij(3, 1));

  // exhaustive small window: the embedding intertwines the brackets
  for (long a1 = -2; a1 <= 2; ++a1)
    for (long m1 = -2; m1 <= 2; ++m1)
      for (long a2 = -2; a2 <= 2; ++a2)
        for (long m2 = -2; m2 <= 2; ++m2) {
          LieElem x = G(a1, m1), y = G(a2, m2);
          CHECK(embed_A_to_glinf(bracket(A, x, y)) ==
                bracket(GL, embed_A_to_glinf(x), embed_A_to_glinf(y)));
        }
}

TEST_CASE("tilde-A bracket: frozen value") {
  const AlgebraSpec& T = algebra("tilde-A");
  LieElem x = basis(loop(GKey{1, 0}, 2));
  LieElem y = basis(loop(GKey{-1, 0}, -3));
  LieElem expected = (G(0, 1) - G(0, -1)).tensor_t(-1) + central(Central::K1);
  CHECK(bracket(T, x, y) == expected);
}

TEST_CASE("key-kind mismatch raises") {
  CHECK_THROWS_AS(bracket(algebra("vq"), G(0, 1), E(1, 0)), std::invalid_argument);
  CHECK_THROWS_AS(form(algebra("vq"), E(1, 0), E(0, 1)), std::invalid_argument);
}

TEST_CASE("central keys bracket to zero with everything") {
  const AlgebraSpec& T = algebra("tilde-A");
  LieElem k1 = central(Central::K1);
  LieElem x = basis(loop(GKey{1, -2}, 3));
  CHECK(bracket(T, k1, x).is_zero());
  CHECK(bracket(T, x, central(Central::K2)).is_zero());
  CHECK(bracket(algebra("hat-A-star"), basis(loop(Central::K1, 2)),
                basis(loop(GKey{0, 1}, -3)))
            .is_zero());
  CHECK(bracket(algebra("vq"), central(Central::C1), E(2, -1)).is_zero());
}

TEST_CASE("form on A and its extension to A-star") {
  const AlgebraSpec& A = algebra("A");
  CHECK(form(A, G(1, 2), G(-1, 2)) == QLaurent(1));
  CHECK(form(A, G(1, 2), G(-1, 3)).is_zero());
  CHECK(form(algebra("A-star"), central(Central::K1), G(0, 0)).is_zero());
}

TEST_CASE("jacobi: frozen instances") {
  CHECK(check_jacobi(algebra("vq"), E(1, 1), E(2, -1), E(-3, 0)));
  CHECK(check_jacobi(algebra("vq"), E(1, 1), E(1, 1), E(2, -1)));
  const AlgebraSpec& T = algebra("tilde-A");
  CHECK(check_jacobi(T, basis(loop(GKey{1, 0}, 1)), basis(loop(GKey{-1, 0}, -1)),
                     basis(loop(GKey{0, 1}, 0))));
}

TEST_CASE("invariance of the form on A") {
  const AlgebraSpec& A = algebra("A");
  CHECK(check_invariance(A, G(1, 2), G(0, 1), G(-1, 2)));
  CHECK(form(A, bracket(A, G(1, 2), G(0, 1)), G(-1, 2)) == QLaurent(1));
  CHECK(check_invariance(A, G(2, 0), G(-1, 1), G(-1, 1)));
  CHECK(check_invariance(A, G(3, 0), G(3, 1), G(3, 2)));  // all pairings vanish
}

TEST_CASE("antisymmetry and jacobi on sampled triples, every instance") {
  std::mt19937_64 rng(2024);
  for (const auto& name : algebra_names()) {
    const AlgebraSpec& A = algebra(name);
    for (int trial = 0; trial < 60; ++trial) {
      LieElem x = basis(sample_key(name, 4, rng));
      LieElem y = basis(sample_key(name, 4, rng));
      LieElem z = basis(sample_key(name, 4, rng));
      INFO(name);
      CHECK(check_antisymmetry(A, x, y));
      CHECK(check_jacobi(A, x, y, z));
    }
  }
}

TEST_CASE("form symmetry and invariance on sampled triples") {
  std::mt19937_64 rng(55);
  for (const std::string name : {"A", "gl-inf", "A-star"}) {
    const AlgebraSpec& A = algebra(name);
    for (int trial = 0; trial < 60; ++trial) {
      LieElem x = basis(sample_key(name, 4, rng));
      LieElem y = basis(sample_key(name, 4, rng));
      LieElem z = basis(sample_key(name, 4, rng));
      INFO(name);
      CHECK(check_form_symmetry(A, x, y));
      CHECK(check_invariance(A, x, y, z));
    }
  }
}

TEST_CASE("vq delta-term bracket over the whole window") {
  const AlgebraSpec& A = algebra("vq");
  for (long k = -4; k <= 4; ++k)
    for (long l = -4; l <= 4; ++l) {
      if (k == 0 && l == 0) continue;
      LieElem expected = QLaurent(k) * central(Central::C1) + QLaurent(l) * central(Central::C2);
      CHECK(bracket(A, E(k, l), E(-k, -l)) == expected);
    }
}
