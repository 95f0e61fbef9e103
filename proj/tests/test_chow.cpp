#include <doctest.h>

#include <random>

#include "ellchow/chow.hpp"
#include "oracles.hpp"

using namespace ellchow;
using oracles::random_bundle_element;
using oracles::random_homogeneous;

namespace {
using P = BasePoly<Rational>;
using E = BundleElement<Rational>;
const P A1 = a1<Rational>();
const P C2 = c2<Rational>();
}  // namespace

TEST_CASE("base ring multiplication and grading") {
  CHECK(A1 * A1 == P::monomial(2, 0, 1));
  CHECK((A1 * A1 + C2) * C2 == P::monomial(2, 1, 1) + P::monomial(0, 2, 1));

  P m = P::monomial(3, 2, 1);  // a1^3 c2^2
  CHECK(m.homogeneous_degree() == 7);
  CHECK((A1 + C2).homogeneous_degree() == std::nullopt);
  CHECK((A1 + C2).is_homogeneous_of(1) == false);
  CHECK(P{}.is_homogeneous_of(5));  // zero is homogeneous of every degree
}

TEST_CASE("no zero terms survive arithmetic") {
  P p = A1 * A1 + C2;
  P q = p - p;
  CHECK(q.is_zero());
  CHECK(q.term_count() == 0);
  P r = p + (-p);
  CHECK(r.is_zero());
}

TEST_CASE("hyperplane class relation") {
  E z = E::z();
  CHECK(z * z == E::pullback(-C2));
  E lhs = (E::pullback(A1) + z) * (E::pullback(A1) - z);
  CHECK(lhs == E::pullback(A1 * A1 + C2));
  CHECK(z * z * z == E{{}, -C2});  // z^3 = -c2 z
}

TEST_CASE("pushforward values") {
  CHECK(pushforward(E::one()).is_zero());
  CHECK(pushforward(E::z()) == P::one());
  // a1 z + c2 pushes to a1
  E x{C2, A1};
  CHECK(pushforward(x) == A1);
}

TEST_CASE("bundle product is commutative and associative") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> deg(0, 4);
  for (int trial = 0; trial < 60; ++trial) {
    E x = random_bundle_element(rng, deg(rng));
    E y = random_bundle_element(rng, deg(rng));
    E w = random_bundle_element(rng, deg(rng));
    CHECK(x * y == y * x);
    CHECK((x * y) * w == x * (y * w));
    // products of elements of degree <= 4 reach degree 12
    auto dx = x.homogeneous_degree();
    auto dy = y.homogeneous_degree();
    if (dx && dy) {
      auto dxy = (x * y).homogeneous_degree();
      if (dxy) CHECK(*dxy == *dx + *dy);
    }
  }
}

TEST_CASE("projection formula") {
  std::mt19937_64 rng(555);
  std::uniform_int_distribution<int> deg(0, 5);
  for (int trial = 0; trial < 60; ++trial) {
    P p = random_homogeneous(rng, deg(rng));
    E x = random_bundle_element(rng, deg(rng));
    CHECK(pushforward(E::pullback(p) * x) == p * pushforward(x));
  }
}

TEST_CASE("pushforward of powers of z matches the inverse-series expansion") {
  auto segre = oracles::segre_series(6);
  E zpow = E::one();
  for (int k = 1; k <= 6; ++k) {
    zpow = zpow * E::z();
    CHECK(pushforward(zpow) == segre[static_cast<size_t>(k - 1)]);
  }
}

TEST_CASE("pushforward drops homogeneous degree by one") {
  std::mt19937_64 rng(88);
  for (int d = 1; d <= 8; ++d) {
    E x = random_bundle_element(rng, d);
    if (!x.homogeneous_degree()) continue;
    P down = pushforward(x);
    if (!down.is_zero()) CHECK(down.is_homogeneous_of(d - 1));
  }
}

TEST_CASE("canonical text rendering") {
  CHECK(to_canonical_text(P{}) == "0");
  CHECK(to_canonical_text(A1) == "a1");
  CHECK(to_canonical_text(-C2) == "-c2");
  P p = Rational(3) * (A1 * A1 * C2) - C2 * C2;
  CHECK(to_canonical_text(p) == "3*c2*a1^2 - c2^2");

  BasePoly<UniPoly> s = BasePoly<UniPoly>::monomial(1, 4, UniPoly::monomial(9, Rational(7))) +
                        BasePoly<UniPoly>::monomial(3, 3, UniPoly::linear(Rational(-1), Rational(0)));
  CHECK(to_canonical_text(s) == "7*N^9*c2^4*a1 - c2^3*a1^3");
}

TEST_CASE("specialization maps symbolic coefficients exactly") {
  BasePoly<UniPoly> s =
      BasePoly<UniPoly>::monomial(1, 0, UniPoly::linear(Rational(-2), Rational(1)));  // (N-2) a1
  CHECK(specialize_at(s, 2).is_zero());
  CHECK(specialize_at(s, 5) == Rational(3) * A1);
}
