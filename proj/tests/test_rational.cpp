#include <doctest.h>

#include <random>
#include <stdexcept>

#include "ellchow/rational.hpp"
#include "oracles.hpp"

using ellchow::Rational;

TEST_CASE("rational arithmetic basics") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(7, 2) * Rational(4) == Rational(14));
  CHECK(Rational(-8, 4) == Rational(-2));
  CHECK(Rational(-8, 4).str() == "-2");
  CHECK(Rational(3, -6).str() == "-1/2");  // sign moves to the numerator
  CHECK(Rational().is_zero());
  CHECK(Rational(0).str() == "0");
}

TEST_CASE("division by zero is an explicit error") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("parse round trip and malformed input") {
  for (const char* s : {"5/6", "-2", "0", "119439360", "-95551488", "7/2"}) {
    CHECK(Rational::parse(s).str() == s);
  }
  CHECK(Rational::parse(" 3/6 ") == Rational(1, 2));
  CHECK(Rational::parse("-4/8").str() == "-1/2");
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
}

TEST_CASE("field axioms on random inputs") {
  std::mt19937_64 rng(20240901);
  for (int trial = 0; trial < 300; ++trial) {
    Rational a = oracles::random_rational(rng);
    Rational b = oracles::random_rational(rng);
    Rational c = oracles::random_rational(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + Rational(0) == a);
    CHECK(a * Rational(1) == a);
    CHECK((a - a).is_zero());
    if (!a.is_zero()) CHECK(a / a == Rational(1));
  }
}

TEST_CASE("ordering and absolute value") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-5) < Rational(1, 100));
  CHECK(Rational(-7, 3).abs() == Rational(7, 3));
  CHECK(Rational(-1).sign() == -1);
  CHECK(Rational(2).sign() == 1);
  CHECK(Rational().sign() == 0);
}
