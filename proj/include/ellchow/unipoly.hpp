#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ellchow/rational.hpp"

namespace ellchow {

// Dense univariate polynomial over Rational. Serves both as the coefficient
// domain in the symbolic parameter N and as forms on the affine line.
// Coefficients are ascending by power with no trailing zeros; the zero
// polynomial is the empty list and has degree() == -1.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(int c) : UniPoly(Rational(c)) {}
  UniPoly(long c) : UniPoly(Rational(c)) {}
  UniPoly(const Rational& c);
  explicit UniPoly(std::vector<Rational> ascending);

  static UniPoly variable();
  static UniPoly monomial(int power, const Rational& c);
  // c0 + c1 * x
  static UniPoly linear(const Rational& c0, const Rational& c1);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rational& coeff(int power) const;
  const Rational& leading() const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& x) const;
  UniPoly derivative() const;
  UniPoly monic() const;

  // Euclidean division; throws std::domain_error when d is zero.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
  static UniPoly gcd(UniPoly a, UniPoly b);  // monic, gcd(0,0) = 0

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& s, const UniPoly& p);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  // Descending powers, e.g. "8*N+1"; zero renders as "0".
  std::string str(std::string_view var = "N") const;

 private:
  std::vector<Rational> c_;
  void trim();
};

}  // namespace ellchow
