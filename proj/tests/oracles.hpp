// Independent oracles and random-input helpers shared by the test suites.
// Everything here recomputes expected values by a route that does not touch
// the code paths under test.
#pragma once

#include <random>
#include <vector>

#include "ellchow/chow.hpp"

namespace oracles {

using ellchow::BasePoly;
using ellchow::Rational;

// Expected graded dimensions of the quotient, degrees 0..16.
inline std::vector<int> expected_quotient_dims() {
  return {1, 1, 2, 2, 3, 3, 4, 4, 5, 4, 4, 3, 3, 2, 2, 1, 1};
}

inline std::vector<int> expected_quotient_dims(int max_degree) {
  std::vector<int> v = expected_quotient_dims();
  v.resize(static_cast<size_t>(max_degree) + 1, 0);
  return v;
}

// Number of monomials a1^i c2^j of weighted degree d, by direct enumeration.
inline int free_ring_dim(int d) {
  if (d < 0) return 0;
  int count = 0;
  for (int j = 0; 2 * j <= d; ++j) ++count;
  return count;
}

// Series coefficients of (1 - t^9)(1 - t^10) / ((1 - t)(1 - t^2)) up to
// max_degree, by truncated power-series multiplication. Valid prediction of
// the quotient dimensions when the two generators form a regular sequence.
inline std::vector<long> complete_intersection_series(int max_degree) {
  const size_t len = static_cast<size_t>(max_degree) + 1;
  auto mul = [&](const std::vector<long>& a, const std::vector<long>& b) {
    std::vector<long> c(len, 0);
    for (size_t i = 0; i < len; ++i) {
      if (a[i] == 0) continue;
      for (size_t j = 0; i + j < len; ++j) c[i + j] += a[i] * b[j];
    }
    return c;
  };
  std::vector<long> geom1(len, 1);  // 1/(1-t)
  std::vector<long> geom2(len, 0);  // 1/(1-t^2)
  for (size_t k = 0; k < len; k += 2) geom2[k] = 1;
  std::vector<long> numerator(len, 0);
  numerator[0] = 1;
  if (9 <= max_degree) numerator[9] -= 1;
  if (10 <= max_degree) numerator[10] -= 1;
  if (19 <= max_degree) numerator[19] += 1;
  return mul(mul(numerator, geom1), geom2);
}

// Segre classes of V from inverting the total Chern class 1 + c2 as a power
// series: s_k solves sum_{i<=k} c_i s_{k-i} = 0 with s_0 = 1.
inline std::vector<BasePoly<Rational>> segre_series(int top) {
  std::vector<BasePoly<Rational>> c(static_cast<size_t>(top) + 1);
  c[0] = BasePoly<Rational>::one();
  if (top >= 2) c[2] = ellchow::c2<Rational>();
  std::vector<BasePoly<Rational>> s(static_cast<size_t>(top) + 1);
  s[0] = BasePoly<Rational>::one();
  for (int k = 1; k <= top; ++k) {
    BasePoly<Rational> acc;
    for (int i = 1; i <= k; ++i) acc += c[static_cast<size_t>(i)] * s[static_cast<size_t>(k - i)];
    s[static_cast<size_t>(k)] = -acc;
  }
  return s;
}

// ---- random inputs -----------------------------------------------------

inline Rational random_rational(std::mt19937_64& rng, int max_abs = 9) {
  std::uniform_int_distribution<long> num(-max_abs, max_abs);
  std::uniform_int_distribution<long> den(1, max_abs);
  return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937_64& rng, int max_abs = 9) {
  for (;;) {
    Rational r = random_rational(rng, max_abs);
    if (!r.is_zero()) return r;
  }
}

// Random homogeneous element of weighted degree d (possibly zero).
inline BasePoly<Rational> random_homogeneous(std::mt19937_64& rng, int d) {
  BasePoly<Rational> p;
  for (int j = 0; 2 * j <= d; ++j) p.add_term({d - 2 * j, j}, random_rational(rng));
  return p;
}

inline ellchow::BundleElement<Rational> random_bundle_element(std::mt19937_64& rng, int d) {
  return {random_homogeneous(rng, d), d >= 1 ? random_homogeneous(rng, d - 1)
                                             : BasePoly<Rational>{}};
}

}  // namespace oracles
