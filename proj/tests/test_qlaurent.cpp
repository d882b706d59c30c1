#include <qdo/jsonio.hpp>
#include <qdo/qlaurent.hpp>
#include <qdo/text.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace qdo;

namespace {

QLaurent random_scalar(std::mt19937_64& rng) {
  QLaurent out;
  long nterms = rng() % 4;
  for (long i = 0; i < nterms; ++i) {
    long e = static_cast<long>(rng() % 13) - 6;
    long num = static_cast<long>(rng() % 21) - 10;
    long den = 1 + static_cast<long>(rng() % 6);
    out.add(e, Rational(num, den));
  }
  return out;
}

}  // namespace

TEST_CASE("q_pow basics") {
  CHECK(q_pow(0) == QLaurent(1));
  CHECK(q_pow(3) * q_pow(-3) == QLaurent(1));

  // coefficient of [E_{1,0}, E_{0,1}]
  QLaurent c = q_pow(-1) - q_pow(1);
  QLaurent expected;
  expected.add(-1, 1);
  expected.add(1, -1);
  CHECK(c == expected);
}

TEST_CASE("is_zero detects canonical zero") {
  CHECK((q_pow(2) - q_pow(2)).is_zero());
  CHECK_FALSE((q_pow(1) - q_pow(-1)).is_zero());
  CHECK((q_pow(0) - QLaurent(1)).is_zero());
}

TEST_CASE("eval_at substitutes exactly") {
  CHECK((q_pow(-1) - q_pow(1)).eval_at(Rational(2)) == Rational(-3, 2));
  CHECK(QLaurent(1).eval_at(Rational(7, 3)) == Rational(1));
  CHECK(q_pow(2).eval_at(Rational(1, 2)) == Rational(1, 4));

  CHECK_THROWS_AS(q_pow(1).eval_at(Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(q_pow(1).eval_at(Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(q_pow(1).eval_at(Rational(-1)), std::invalid_argument);
}

TEST_CASE("ring axioms hold on random triples") {
  std::mt19937_64 rng(12345);
  for (int i = 0; i < 200; ++i) {
    QLaurent a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("eval_at is a ring homomorphism") {
  std::mt19937_64 rng(999);
  Rational r(3, 7);
  for (int i = 0; i < 100; ++i) {
    QLaurent a = random_scalar(rng), b = random_scalar(rng);
    CHECK((a * b).eval_at(r) == a.eval_at(r) * b.eval_at(r));
    CHECK((a + b).eval_at(r) == a.eval_at(r) + b.eval_at(r));
  }
}

TEST_CASE("pow") {
  CHECK(q_pow(2).pow(-3) == q_pow(-6));
  CHECK(QLaurent::monomial(Rational(2), 1).pow(-2) ==
        QLaurent::monomial(Rational(1, 4), -2));
  QLaurent s = q_pow(1) + QLaurent(1);
  CHECK(s.pow(2) == s * s);
  CHECK_THROWS_AS(s.pow(-1), std::invalid_argument);
}

TEST_CASE("text round-trip") {
  std::mt19937_64 rng(4242);
  for (int i = 0; i < 100; ++i) {
    QLaurent a = random_scalar(rng);
    CHECK(parse_scalar(a.str()) == a);
  }
  CHECK(parse_scalar("0").is_zero());
  CHECK(parse_scalar("1*q^-1 - 1*q^1") == q_pow(-1) - q_pow(1));
  CHECK(parse_scalar("(q^-1 - q) * (q + 1)") == (q_pow(-1) - q_pow(1)) * (q_pow(1) + QLaurent(1)));
  CHECK(parse_scalar("-3/2") == QLaurent(Rational(-3, 2)));
}

TEST_CASE("text errors carry positions") {
  CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
  CHECK_THROWS_AS(parse_scalar("q^"), ParseError);
  CHECK_THROWS_AS(parse_scalar("1 + "), ParseError);
  CHECK_THROWS_AS(parse_scalar("1 2"), ParseError);
}

TEST_CASE("json round-trip") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 50; ++i) {
    QLaurent a = random_scalar(rng);
    CHECK(scalar_from_json(scalar_to_json(a)) == a);
  }
  // triples sorted by exponent, integers as decimal strings
  QLaurent a = q_pow(-1) - q_pow(1);
  Json j = scalar_to_json(a);
  REQUIRE(j.size() == 2);
  CHECK(j[0][0].get<long>() == -1);
  CHECK(j[0][1].get<std::string>() == "1");
  CHECK(j[0][2].get<std::string>() == "1");
  CHECK(j[1][1].get<std::string>() == "-1");
}
