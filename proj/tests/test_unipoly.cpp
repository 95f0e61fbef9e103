#include <doctest.h>

#include <random>

#include "ellchow/unipoly.hpp"
#include "oracles.hpp"

using ellchow::Rational;
using ellchow::UniPoly;

namespace {

UniPoly random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  int d = deg(rng);
  std::vector<Rational> c(static_cast<size_t>(d) + 1);
  for (auto& x : c) x = oracles::random_rational(rng, 5);
  return UniPoly(std::move(c));
}

}  // namespace

TEST_CASE("evaluation is exact") {
  UniPoly p = UniPoly::linear(Rational(1), Rational(8));  // 8N + 1
  CHECK(p.eval(Rational(2)) == Rational(17));
  CHECK(UniPoly().eval(Rational(123)) == Rational(0));
  UniPoly q = UniPoly::monomial(9, Rational(119439360));
  CHECK(q.eval(Rational(1)) == Rational(119439360));
  CHECK(q.eval(Rational(2)) == Rational(119439360) * Rational(512));
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    UniPoly p = random_poly(rng, 6);
    UniPoly q = random_poly(rng, 6);
    Rational x = oracles::random_rational(rng);
    CHECK((p * q).eval(x) == p.eval(x) * q.eval(x));
    CHECK((p + q).eval(x) == p.eval(x) + q.eval(x));
  }
}

TEST_CASE("text rendering in descending powers") {
  CHECK(UniPoly::linear(Rational(1), Rational(8)).str() == "8*N+1");
  CHECK(UniPoly().str() == "0");
  CHECK(UniPoly(Rational(-3)).str() == "-3");
  UniPoly p(std::vector<Rational>{Rational(-1296), Rational(1620)});
  CHECK(p.str() == "1620*N-1296");
  UniPoly q(std::vector<Rational>{Rational(0), Rational(1, 2), Rational(-1)});
  CHECK(q.str() == "-N^2+1/2*N");
  CHECK(p.str("t") == "1620*t-1296");
}

TEST_CASE("no trailing zeros and degree bookkeeping") {
  UniPoly p(std::vector<Rational>{Rational(1), Rational(2), Rational(0), Rational(0)});
  CHECK(p.degree() == 1);
  UniPoly z(std::vector<Rational>{Rational(0), Rational(0)});
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  UniPoly diff = p - p;
  CHECK(diff.is_zero());
}

TEST_CASE("division and gcd") {
  const UniPoly t = UniPoly::variable();
  UniPoly a = (t - UniPoly(1)) * (t - UniPoly(2));
  UniPoly b = (t - UniPoly(1)) * (t - UniPoly(3));
  CHECK(UniPoly::gcd(a, b) == t - UniPoly(1));

  auto [q, r] = a.divmod(t - UniPoly(2));
  CHECK(q == t - UniPoly(1));
  CHECK(r.is_zero());

  CHECK(UniPoly::gcd(UniPoly(), UniPoly()).is_zero());
  CHECK(UniPoly::gcd(Rational(3) * a, UniPoly()) == a.monic());
  CHECK_THROWS_AS(a.divmod(UniPoly()), std::domain_error);
}

TEST_CASE("gcd against product structure on random inputs") {
  std::mt19937_64 rng(991);
  const UniPoly t = UniPoly::variable();
  for (int trial = 0; trial < 50; ++trial) {
    UniPoly common = t - UniPoly(oracles::random_rational(rng, 4));
    UniPoly a = common * random_poly(rng, 3);
    UniPoly b = common * random_poly(rng, 3);
    if (a.is_zero() || b.is_zero()) continue;
    auto [qa, ra] = a.divmod(UniPoly::gcd(a, b));
    CHECK(ra.is_zero());
    auto [qb, rb] = b.divmod(UniPoly::gcd(a, b));
    CHECK(rb.is_zero());
    CHECK(UniPoly::gcd(a, b).degree() >= 1);
  }
}

TEST_CASE("derivative") {
  const UniPoly t = UniPoly::variable();
  UniPoly p = t * t * t;  // t^3
  CHECK(p.derivative() == Rational(3) * (t * t));
  CHECK(UniPoly(Rational(5)).derivative().is_zero());
}
