#include "ellchow/chern.hpp"

#include <stdexcept>

namespace ellchow {

namespace {

void check_args(int m, int k) {
  if (m < 0) throw std::invalid_argument("principal_parts_factors: order m must be >= 0");
  if (k < 1) throw std::invalid_argument("principal_parts_factors: power k must be >= 1");
}

// Ring of polynomials in two formal Chern roots, both of weight 1.
struct RootVars {
  static constexpr int weights[2] = {1, 1};
  static constexpr const char* names[2] = {"r1", "r2"};
};

}  // namespace

BundleDescriptor<UniPoly> principal_parts_factors(int m, int k) {
  check_args(m, k);
  BundleDescriptor<UniPoly> factors;
  factors.reserve(static_cast<size_t>(m) + 1);
  for (int j = 0; j <= m; ++j) {
    // k*(a1 + N*z) + j*c1(Omega) = k*a1 + (k*N - 2j)*z
    BasePoly<UniPoly> alpha = BasePoly<UniPoly>::monomial(1, 0, UniPoly(Rational(k)));
    UniPoly zc = UniPoly::linear(Rational(kRelativeCotangentZCoeff * j), Rational(k));
    factors.emplace_back(std::move(alpha), BasePoly<UniPoly>::constant(std::move(zc)));
  }
  return factors;
}

BundleDescriptor<Rational> principal_parts_factors(int m, int k, long n) {
  check_args(m, k);
  BundleDescriptor<Rational> factors;
  factors.reserve(static_cast<size_t>(m) + 1);
  for (int j = 0; j <= m; ++j) {
    BasePoly<Rational> alpha = BasePoly<Rational>::monomial(1, 0, Rational(k));
    Rational zc = Rational(k) * Rational(n) + Rational(kRelativeCotangentZCoeff * j);
    factors.emplace_back(std::move(alpha), BasePoly<Rational>::constant(zc));
  }
  return factors;
}

bool twist_c2_identity_check() {
  using P = Bivariate<Rational, RootVars>;
  const P r1 = P::var0();
  const P r2 = P::var1();
  const Rational half(1, 2), quarter(1, 4);

  // Twisting E^v by the square-root line bundle shifts each dual root by
  // (r1 + r2)/2.
  P n1 = half * (r1 + r2);
  P left = (-r1 + n1) * (-r2 + n1);
  P right = -(quarter * ((r1 + r2) * (r1 + r2))) + r1 * r2;
  return left == right;
}

}  // namespace ellchow
