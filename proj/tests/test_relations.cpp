#include <doctest.h>

#include <random>

#include "ellchow/chern.hpp"
#include "ellchow/relations.hpp"
#include "oracles.hpp"

using namespace ellchow;

namespace {

BasePoly<UniPoly> scale(const BasePoly<UniPoly>& p, long s) {
  return p.map_coeffs([&](const UniPoly& c) { return Rational(s) * c; });
}

// Re-derives the pushforwards with the wrong sign in the quadratic relation
// (z^2 = +c2 instead of -c2), reusing only the base-ring arithmetic. The
// result must disagree with the reference exactly on the monomials of odd
// c2-degree.
SymbolicRelations derive_with_flipped_relation() {
  using P = BasePoly<UniPoly>;
  struct Elem {
    P alpha, beta;
  };
  auto mul = [](const Elem& x, const Elem& y) {
    return Elem{x.alpha * y.alpha + c2<UniPoly>() * (x.beta * y.beta),
                x.alpha * y.beta + y.alpha * x.beta};
  };
  Elem top{P::one(), {}};
  for (auto [m, k] : {std::pair{3, 4}, std::pair{5, 6}}) {
    for (int j = 0; j <= m; ++j) {
      Elem factor{P::monomial(1, 0, UniPoly(Rational(k))),
                  P::constant(UniPoly::linear(Rational(-2 * j), Rational(k)))};
      top = mul(top, factor);
    }
  }
  Elem top_z = mul(top, Elem{{}, P::one()});
  return {top.beta, top_z.beta};
}

}  // namespace

TEST_CASE("symbolic derivation matches the reference coefficients") {
  SymbolicRelations s = derive_relations();
  GoldenReport rep = golden_compare(s);
  CHECK(rep.ok());

  // Spot-checked values.
  CHECK(s.r1.coeff(1, 4).coeff(9) == Rational(119439360));
  CHECK(s.r1.coeff(9, 0) == UniPoly::linear(Rational(-95551488), Rational(119439360)));
  CHECK(s.r2.coeff(0, 5).coeff(10) == Rational(-11943936));
  CHECK(s.r2.coeff(10, 0) == UniPoly(Rational(11943936)));
}

TEST_CASE("derived relations are homogeneous with bounded parameter degree") {
  SymbolicRelations s = derive_relations();
  CHECK(s.r1.is_homogeneous_of(9));
  CHECK(s.r2.is_homogeneous_of(10));
  for (const auto& [m, c] : s.r1.terms()) CHECK(c.degree() <= 9);
  for (const auto& [m, c] : s.r2.terms()) CHECK(c.degree() <= 10);

  for (long n : {2L, 5L, 9L}) {
    Relations r = derive_relations(n);
    CHECK(r.r1.is_homogeneous_of(9));
    CHECK(r.r2.is_homogeneous_of(10));
  }
}

TEST_CASE("sign-flipped quadratic relation mismatches exactly the odd c2 monomials") {
  GoldenReport rep = golden_compare(derive_with_flipped_relation());
  CHECK(!rep.ok());
  CHECK(!rep.mismatches.empty());
  for (const auto& m : rep.mismatches) CHECK(m.j % 2 == 1);
  // Even c2-degree monomials agree, so not everything mismatches.
  size_t total_monomials =
      reference_pushforwards().r1.term_count() + reference_pushforwards().r2.term_count();
  CHECK(rep.mismatches.size() < total_monomials);
}

TEST_CASE("reference tables are consistent: raw = content * simplified") {
  const SymbolicRelations& raw = reference_pushforwards();
  const SymbolicRelations& simp = reference_simplified();
  CHECK(raw.r1 == scale(simp.r1, 73728));
  CHECK(raw.r2 == scale(simp.r2, 36864));
}

TEST_CASE("specialization commutes with derivation") {
  SymbolicRelations s = derive_relations();
  for (long n = 2; n <= 12; ++n) {
    Relations direct = derive_relations(n);
    Relations via_symbolic = specialize(s, n);
    CHECK(direct.r1 == via_symbolic.r1);
    CHECK(direct.r2 == via_symbolic.r2);
  }
}

TEST_CASE("derivation below the moduli range carries a warning flag") {
  CHECK(derive_relations(1).below_moduli_range());
  CHECK(!derive_relations(2).below_moduli_range());
}

TEST_CASE("ideal equality of raw and simplified generators") {
  SymbolicRelations s = derive_relations();
  const SymbolicRelations& simp = reference_simplified();
  for (long n = 2; n <= 8; ++n) {
    CHECK(ideal_equal(specialize(s, n), specialize(simp, n), 20));
  }
}

TEST_CASE("ideal equality separates strictly smaller ideals") {
  Relations full = derive_relations(2);
  Relations partial = full;
  partial.r2 = {};
  CHECK(!ideal_equal(full, partial, 20));
  CHECK(!ideal_equal(partial, full, 20));
}

TEST_CASE("ideal equality under unit scaling and swap") {
  Relations r = derive_relations(5);
  Relations scaled = r;
  scaled.r1 = Rational(3) * r.r1;
  scaled.r2 = Rational(-7) * r.r2;
  CHECK(ideal_equal(r, scaled, 20));

  const BasePoly<Rational> swapped[] = {r.r2, r.r1};
  const BasePoly<Rational> original[] = {r.r1, r.r2};
  CHECK(ideal_equal(std::span<const BasePoly<Rational>>(original),
                    std::span<const BasePoly<Rational>>(swapped), 20));
}

TEST_CASE("ideal equality is reflexive and symmetric on random scalings") {
  std::mt19937_64 rng(2024);
  for (long n : {2L, 3L, 7L}) {
    Relations r = derive_relations(n);
    CHECK(ideal_equal(r, r, 15));
    Relations other = r;
    other.r1 = oracles::random_nonzero_rational(rng) * r.r1;
    other.r2 = oracles::random_nonzero_rational(rng) * r.r2;
    CHECK(ideal_equal(r, other, 15) == ideal_equal(other, r, 15));
    CHECK(ideal_equal(r, other, 15));
  }
}

TEST_CASE("ideal equality requires matching specialization") {
  CHECK_THROWS_AS(ideal_equal(derive_relations(2), derive_relations(3), 10),
                  std::invalid_argument);
}

TEST_CASE("canonical text of the first generator begins with the leading terms") {
  SymbolicRelations s = derive_relations();
  std::string text = to_canonical_text(s.r1);
  CHECK(text.substr(0, 45) == "119439360*N^9*c2^4*a1 - 859963392*N^8*c2^4*a1");
}
