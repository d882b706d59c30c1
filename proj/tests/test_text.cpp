#include <qdo/jsonio.hpp>
#include <qdo/text.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace qdo;

TEST_CASE("element parsing") {
  const AlgebraSpec& VQ = algebra("vq");

  CHECK(parse_element("E[1,0]", VQ) == E(1, 0));
  CHECK(parse_element("E[0,0]", VQ).is_zero());
  CHECK(parse_element("(q^-1 - q) * E[1,1]", VQ) == bracket(VQ, E(1, 0), E(0, 1)));
  CHECK(parse_element("c1 + 2*c2", VQ) ==
        central(Central::C1) + QLaurent(2) * central(Central::C2));
  CHECK(parse_element("E[1,0] - E[1,0]", VQ).is_zero());
  CHECK(parse_element("0", VQ).is_zero());
  CHECK(parse_element("1/2 * q^2 * E[3,-1]", VQ) ==
        QLaurent::monomial(Rational(1, 2), 2) * E(3, -1));
}

TEST_CASE("loop keys parse and print") {
  const AlgebraSpec& T = algebra("tilde-A");
  LieElem x = parse_element("(G[1,0])@t^2", T);
  CHECK(x == basis(loop(GKey{1, 0}, 2)));
  CHECK(key_str(loop(GKey{1, 0}, 2)) == "(G[1,0])@t^2");
  CHECK(parse_element("(K1)@t^-1", algebra("hat-A-star")) ==
        basis(loop(Central::K1, -1)));
}

TEST_CASE("parity handling in A-contexts") {
  const AlgebraSpec& A = algebra("A");
  CHECK(parse_element("Eij[3,1]", A) == G(1, 2));
  CHECK_THROWS_AS(parse_element("Eij[2,1]", A), std::invalid_argument);
  CHECK_THROWS_AS(parse_element("G[1,2]", algebra("gl-inf")), std::invalid_argument);
  CHECK_THROWS_AS(parse_element("G[1,2]", algebra("vq")), std::invalid_argument);
}

TEST_CASE("element parse errors carry positions") {
  const AlgebraSpec& VQ = algebra("vq");
  CHECK_THROWS_AS(parse_element("E[1,]", VQ), ParseError);
  CHECK_THROWS_AS(parse_element("E[1,0] +", VQ), ParseError);
  CHECK_THROWS_AS(parse_element("2 * 3", VQ), ParseError);
  CHECK_THROWS_AS(parse_element("E[1,0] E[0,1]", VQ), ParseError);
  try {
    parse_element("E[1,0] + E[2", VQ);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.pos >= 12);
  }
}

TEST_CASE("element print round-trip per algebra") {
  std::mt19937_64 rng(606);
  auto idx = [&](long w) {
    return static_cast<long>(rng() % (2 * w + 1)) - w;
  };
  auto rand_scalar = [&]() {
    QLaurent s;
    long n = 1 + rng() % 2;
    for (long i = 0; i < n; ++i)
      s.add(idx(4), Rational(idx(9), 1 + (rng() % 4)));
    return s;
  };

  for (int i = 0; i < 80; ++i) {
    LieElem x;
    const AlgebraSpec& VQ = algebra("vq");
    long terms = 1 + rng() % 3;
    for (long t = 0; t < terms; ++t) x.add(EKey{idx(4), idx(4)}, rand_scalar());
    CHECK(parse_element(elem_str(x), VQ) == x);
    CHECK(elem_from_json(elem_to_json(x), VQ) == x);
  }

  for (int i = 0; i < 80; ++i) {
    LieElem x;
    const AlgebraSpec& T = algebra("tilde-A");
    long terms = 1 + rng() % 3;
    for (long t = 0; t < terms; ++t)
      x.add(loop(GKey{idx(3), idx(3)}, idx(3)), rand_scalar());
    x.add(Central::K1, rand_scalar());
    CHECK(parse_element(elem_str(x), T) == x);
    CHECK(elem_from_json(elem_to_json(x), T) == x);
  }
}

TEST_CASE("zero element prints as 0") {
  CHECK(elem_str(LieElem()) == "0");
  CHECK(elem_str(E(1, 0) - E(1, 0)) == "0");
}
