#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "ellchow/unipoly.hpp"

namespace ellchow {

// Vanishing order of the zero polynomial, and of any form at a point where
// it vanishes identically.
inline constexpr long kInfiniteOrder = std::numeric_limits<long>::max();

// A pair of forms (A, B) of degrees 4n and 6n on the line, stored
// dehomogenized; vanishing at infinity is the degree drop of the form.
struct WeierstrassPair {
  long n = 1;
  UniPoly A;
  UniPoly B;

  // Validates list lengths 4n+1 and 6n+1 (ascending powers; leading zeros
  // encode vanishing at infinity). Throws std::invalid_argument.
  static WeierstrassPair from_coeff_lists(long n, std::vector<Rational> a,
                                          std::vector<Rational> b);

  long form_degree_a() const { return 4 * n; }
  long form_degree_b() const { return 6 * n; }
};

long vanishing_order_at(const UniPoly& p, const Rational& q);
long vanishing_order_at_infinity(const UniPoly& p, long form_degree);

// 4A^3 + 27B^2, a form of degree 12n: zeros locate singular fibers,
// identically zero characterizes the deepest degeneration locus.
UniPoly discriminant(const WeierstrassPair& w);

// gcd(P, P', ..., P^(m-1)): monic polynomial whose roots over the algebraic
// closure are exactly the points where P vanishes to order >= m. The zero
// polynomial propagates (everything vanishes); m must be >= 1.
UniPoly multiplicity_locus(const UniPoly& p, long m);

struct Witness {
  std::string condition;  // "minimality" | "stability" | "semistability"
  bool at_infinity = false;
  std::optional<Rational> point;      // rational point, when extractable
  std::optional<UniPoly> common_factor;  // otherwise: factor of positive degree
  long order_a = 0;  // exact orders at a known point; threshold lower bounds
  long order_b = 0;  // when only the common factor is reported
};

struct ConditionReport {
  bool discriminant_ok = false;  // 4A^3 + 27B^2 not identically zero
  bool minimal = false;          // no point with v(A) >= 4 and v(B) >= 6
  bool stable = false;           // no point with v(A) >= 2n and v(B) >= 3n
  bool semistable = false;       // no point with v(A) >= 2n+1 and v(B) >= 3n+1
  bool in_delta1 = false;        // discriminant identically zero
  std::vector<Witness> witnesses;
};

// Decides every condition exactly over Q, including at infinity. Points are
// never factored over extensions: existence is decided by gcd-degree
// arithmetic on derivative chains, which is complete over the closure.
ConditionReport check_conditions(const WeierstrassPair& w);

// (10n + 2) - (2n + 1) = 8n + 1: parameter count of the deepest
// degeneration locus inside the space of pairs of forms. Requires n >= 1.
long delta1_codimension(long n);

}  // namespace ellchow
