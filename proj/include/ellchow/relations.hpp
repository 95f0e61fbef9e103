#pragma once

#include <span>
#include <string>
#include <vector>

#include "ellchow/chow.hpp"

namespace ellchow {

// The two generators of the relation ideal I_N in Q[a1, c2], obtained by
// pushing forward the top Chern class of P^3(L^4) + P^5(L^6) (degree 9)
// and its product with z (degree 10).
struct SymbolicRelations {
  BasePoly<UniPoly> r1;  // homogeneous of weighted degree 9
  BasePoly<UniPoly> r2;  // homogeneous of weighted degree 10
};

struct Relations {
  long n = 0;
  BasePoly<Rational> r1;
  BasePoly<Rational> r2;
  // n < 2 still computes, but the moduli-space reading of the result fails.
  bool below_moduli_range() const { return n < 2; }
};

SymbolicRelations derive_relations();
Relations derive_relations(long n);
Relations specialize(const SymbolicRelations& s, long n);

// Reference data: the two raw pushforward polynomials, and the rescaled
// generators p1, p2 spanning the same ideal. Independently computed with a
// general-purpose intersection-theory system; any sign or convention error
// in the bundle algebra surfaces as a coefficient mismatch against these.
const SymbolicRelations& reference_pushforwards();
const SymbolicRelations& reference_simplified();

struct GoldenMismatch {
  int generator;  // 1 or 2
  int i, j;       // monomial a1^i c2^j
  UniPoly expected;
  UniPoly got;
};

struct GoldenReport {
  std::vector<GoldenMismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// Coefficient-by-coefficient comparison of a symbolic derivation against
// reference_pushforwards().
GoldenReport golden_compare(const SymbolicRelations& s);

// Degree-by-degree equality of the ideals generated by two lists of
// homogeneous polynomials: for every d <= max_degree, the spans of the
// degree-d monomial multiples agree (checked by ranks of stacked coefficient
// matrices over Q). Zero generators are ignored.
bool ideal_equal(std::span<const BasePoly<Rational>> a, std::span<const BasePoly<Rational>> b,
                 int max_degree);
bool ideal_equal(const Relations& a, const Relations& b, int max_degree = 20);

}  // namespace ellchow
