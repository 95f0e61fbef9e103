#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ellchow/bivariate.hpp"
#include "ellchow/rational.hpp"
#include "ellchow/unipoly.hpp"

namespace ellchow {

// The base ring Q[a1, c2] with deg a1 = 1, deg c2 = 2.
struct ChowVars {
  static constexpr int weights[2] = {1, 2};
  static constexpr const char* names[2] = {"a1", "c2"};
};

template <class C>
using BasePoly = Bivariate<C, ChowVars>;

template <class C>
BasePoly<C> a1() {
  return BasePoly<C>::var0();
}
template <class C>
BasePoly<C> c2() {
  return BasePoly<C>::var1();
}

// Element of the Chow ring of the universal P^1-bundle P(V), written
// alpha + beta*z where z is the hyperplane class. V has rank 2 and trivial
// first Chern class, so z satisfies z^2 = -c2 (subspace convention); the
// product keeps the z-degree below 2 by construction.
template <class C>
struct BundleElement {
  BasePoly<C> alpha;
  BasePoly<C> beta;

  BundleElement() = default;
  BundleElement(BasePoly<C> a, BasePoly<C> b) : alpha(std::move(a)), beta(std::move(b)) {}

  static BundleElement zero() { return {}; }
  static BundleElement one() { return {BasePoly<C>::one(), {}}; }
  static BundleElement z() { return {{}, BasePoly<C>::one()}; }
  static BundleElement pullback(BasePoly<C> p) { return {std::move(p), {}}; }

  bool is_zero() const { return alpha.is_zero() && beta.is_zero(); }

  // Defined when alpha is homogeneous of d and beta of d - 1 (z has weight 1).
  std::optional<int> homogeneous_degree() const {
    if (is_zero()) return std::nullopt;
    if (beta.is_zero()) return alpha.homogeneous_degree();
    auto db = beta.homogeneous_degree();
    if (!db) return std::nullopt;
    int d = *db + 1;
    return alpha.is_homogeneous_of(d) ? std::optional<int>(d) : std::nullopt;
  }

  BundleElement operator-() const { return {-alpha, -beta}; }
  BundleElement& operator+=(const BundleElement& o) {
    alpha += o.alpha;
    beta += o.beta;
    return *this;
  }
  BundleElement& operator-=(const BundleElement& o) {
    alpha -= o.alpha;
    beta -= o.beta;
    return *this;
  }
  friend BundleElement operator+(BundleElement a, const BundleElement& b) { return a += b; }
  friend BundleElement operator-(BundleElement a, const BundleElement& b) { return a -= b; }

  // (a1 + b1 z)(a2 + b2 z) = (a1 a2 - c2 b1 b2) + (a1 b2 + a2 b1) z
  friend BundleElement operator*(const BundleElement& x, const BundleElement& y) {
    return {x.alpha * y.alpha - c2<C>() * (x.beta * y.beta),
            x.alpha * y.beta + y.alpha * x.beta};
  }

  friend bool operator==(const BundleElement& x, const BundleElement& y) {
    return x.alpha == y.alpha && x.beta == y.beta;
  }
  friend bool operator!=(const BundleElement& x, const BundleElement& y) { return !(x == y); }
};

// Pushforward along the bundle projection: kills the z-free part, keeps the
// z-coefficient, and is linear over the base ring. Drops degree by 1.
template <class C>
BasePoly<C> pushforward(const BundleElement<C>& x) {
  return x.beta;
}

// Specialization of the symbolic parameter at an integer.
inline BasePoly<Rational> specialize_at(const BasePoly<UniPoly>& p, long n) {
  return p.map_coeffs([&](const UniPoly& c) { return c.eval(Rational(n)); });
}

inline BundleElement<Rational> specialize_at(const BundleElement<UniPoly>& x, long n) {
  return {specialize_at(x.alpha, n), specialize_at(x.beta, n)};
}

namespace detail {

inline void append_monomial_text(std::ostringstream& os, bool empty_so_far, int i, int j) {
  bool any = !empty_so_far;
  auto sep = [&] {
    if (any) os << '*';
    any = true;
  };
  if (j > 0) {
    sep();
    os << "c2";
    if (j > 1) os << '^' << j;
  }
  if (i > 0) {
    sep();
    os << "a1";
    if (i > 1) os << '^' << i;
  }
}

inline void append_signed_term(std::ostringstream& os, bool& first, const Rational& c,
                               const std::string& mono_tail) {
  Rational a = c.abs();
  if (first) {
    if (c.sign() < 0) os << '-';
    first = false;
  } else {
    os << (c.sign() < 0 ? " - " : " + ");
  }
  bool unit = (a == Rational(1)) && !mono_tail.empty();
  if (!unit) os << a.str();
  if (!mono_tail.empty()) {
    if (!unit) os << '*';
    os << mono_tail;
  }
}

}  // namespace detail

// Canonical text for specialized polynomials: terms in descending
// lexicographic (i, j) order, monomials rendered as c2^j*a1^i.
inline std::string to_canonical_text(const BasePoly<Rational>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    std::ostringstream mono;
    detail::append_monomial_text(mono, true, m.first, m.second);
    detail::append_signed_term(os, first, c, mono.str());
  }
  return os.str();
}

// Canonical text for symbolic polynomials: flattened over powers of N,
// ordered by N-degree descending, then (i, j) descending lexicographic,
// e.g. "119439360*N^9*c2^4*a1 - 859963392*N^8*c2^4*a1 + ...".
inline std::string to_canonical_text(const BasePoly<UniPoly>& p) {
  if (p.is_zero()) return "0";
  struct Flat {
    int npow, i, j;
    Rational c;
  };
  std::vector<Flat> flat;
  for (const auto& [m, c] : p.terms())
    for (int k = c.degree(); k >= 0; --k)
      if (!c.coeff(k).is_zero()) flat.push_back({k, m.first, m.second, c.coeff(k)});
  std::sort(flat.begin(), flat.end(), [](const Flat& a, const Flat& b) {
    if (a.npow != b.npow) return a.npow > b.npow;
    return std::pair{a.i, a.j} > std::pair{b.i, b.j};
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& t : flat) {
    std::ostringstream mono;
    if (t.npow > 0) {
      mono << 'N';
      if (t.npow > 1) mono << '^' << t.npow;
    }
    detail::append_monomial_text(mono, t.npow == 0, t.i, t.j);
    detail::append_signed_term(os, first, t.c, mono.str());
  }
  return os.str();
}

}  // namespace ellchow
