#pragma once

#include <vector>

#include "ellchow/chow.hpp"

namespace ellchow {

// A bundle presented, for Chern-class purposes, as a list of line-bundle
// first Chern classes (the splitting principle applied to a filtration with
// line-bundle graded pieces). rank = factors.size().
template <class C>
using BundleDescriptor = std::vector<BundleElement<C>>;

// c1 of the relative cotangent bundle of P(V): the relative Euler sequence
// for a rank-2 V with c1(V) = 0 gives c1(Omega) = -2z.
inline constexpr int kRelativeCotangentZCoeff = -2;

// Factors of the order-m principal parts bundle of the k-th power of the
// relative degree-N line bundle L, with c1(L) = a1 + N*z: the graded pieces
// are L^k tensor Omega^j, so the j-th factor is k*a1 + (k*N - 2j)*z for
// j = 0..m. Throws std::invalid_argument for m < 0 or k < 1.
BundleDescriptor<UniPoly> principal_parts_factors(int m, int k);
BundleDescriptor<Rational> principal_parts_factors(int m, int k, long n);

// Product of all factors; the empty descriptor gives 1 (rank-0 bundle).
template <class C>
BundleElement<C> top_chern(const BundleDescriptor<C>& b) {
  BundleElement<C> t = BundleElement<C>::one();
  for (const auto& f : b) t = t * f;
  return t;
}

// Checks, in the ring of polynomials in two formal Chern roots, that a
// rank-2 bundle E twisted down by a square root of det E satisfies
// c2(E^v tensor N) = -1/4 c1(E)^2 + c2(E).
bool twist_c2_identity_check();

}  // namespace ellchow
