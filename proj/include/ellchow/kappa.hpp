#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "ellchow/bivariate.hpp"
#include "ellchow/rational.hpp"

namespace ellchow {

// Formal degree-1 shift variables: l (fiber-class shift) and l' (section-
// class shift).
struct ShiftVars {
  static constexpr int weights[2] = {1, 1};
  static constexpr const char* names[2] = {"l", "l'"};
};
using ShiftPoly = Bivariate<Rational, ShiftVars>;

// Fiberwise constants of the universal surface: the codimension-0 kappa
// symbols evaluate to intersection numbers on a fiber. On a K3 fiber with
// section sigma and fiber class f: sigma^2 = -2, sigma.f = 1, f^2 = 0, and
// the integral of c2 of the tangent bundle is the Euler number 24.
struct FiberConstants {
  Rational sigma_sq{-2};
  Rational sigma_dot_f{1};
  Rational f_sq{0};
  Rational c2_integral{24};
  static const FiberConstants& k3();
};

// A symbol in the kappa algebra: the unit, the Hodge class lambda, or
// kappa_{i,j,k} = pushforward of sigma^i f^j c2(T)^k, of codimension
// i + j + 2k - 2.
struct KappaSymbol {
  enum class Kind { unit, lambda, kappa };
  Kind kind = Kind::unit;
  int i = 0, j = 0, k = 0;

  int codimension() const;
  std::string str() const;
  friend auto operator<=>(const KappaSymbol&, const KappaSymbol&) = default;
};

// Q-linear combination of symbols with coefficients in Q[l, l']. Symbols of
// negative codimension are rewritten to 0 on construction; codimension-0
// kappa symbols evaluate to their fiberwise constants.
class KappaExpr {
 public:
  KappaExpr() = default;

  static KappaExpr zero() { return {}; }
  static KappaExpr unit(Rational c);
  static KappaExpr lambda();
  static KappaExpr kappa(int i, int j, int k,
                         const FiberConstants& fc = FiberConstants::k3());

  bool is_zero() const { return t_.empty(); }
  const std::map<KappaSymbol, ShiftPoly>& terms() const { return t_; }
  bool has_shift_variables() const;
  // Every term satisfies codim(symbol) + degree(coefficient) = c; the zero
  // expression is homogeneous of every codimension.
  bool is_homogeneous_of_codim(int c) const;

  KappaExpr operator-() const;
  KappaExpr& operator+=(const KappaExpr& o);
  KappaExpr& operator-=(const KappaExpr& o);
  friend KappaExpr operator+(KappaExpr a, const KappaExpr& b) { return a += b; }
  friend KappaExpr operator-(KappaExpr a, const KappaExpr& b) { return a -= b; }
  friend KappaExpr operator*(const Rational& s, const KappaExpr& e);
  friend bool operator==(const KappaExpr& a, const KappaExpr& b) { return a.t_ == b.t_; }
  friend bool operator!=(const KappaExpr& a, const KappaExpr& b) { return !(a == b); }

  std::string str() const;

  void add_term(const KappaSymbol& s, ShiftPoly c);

 private:
  std::map<KappaSymbol, ShiftPoly> t_;
};

// Substitutes sigma -> sigma + pi^*(l') and/or f -> f + pi^*(l), expands by
// the push-pull formula, evaluates codimension-0 symbols via fc, and drops
// symbols of negative codimension. The input must not already contain shift
// variables (throws std::invalid_argument).
KappaExpr shift_expand(const KappaExpr& e, bool shift_sigma, bool shift_f,
                       const FiberConstants& fc = FiberConstants::k3());

// Evaluates the shift variables at rational values.
KappaExpr substitute_shifts(const KappaExpr& e, const Rational& l, const Rational& lp);

// The four combinations of codimension-1 kappa classes that are independent
// of the choice of universal line bundles, each a stated multiple of lambda.
struct InvariantCombination {
  std::string name;
  KappaExpr expr;
  Rational lambda_multiple;
};
const std::vector<InvariantCombination>& invariant_combinations();

struct InvarianceReport {
  struct Row {
    std::string name;
    KappaExpr residual;  // shift_expand(expr) - expr; zero on success
    bool ok = false;
  };
  std::vector<Row> rows;
  bool all_ok = false;
};
InvarianceReport verify_invariance(const FiberConstants& fc = FiberConstants::k3());

// Intersection numbers of the test curve in the moduli space swept out by
// the resolved STU fibration, together with the degree of lambda on it.
struct TestCurveData {
  Rational k300{16};
  Rational k101{-8};
  Rational k210{-4};
  Rational k011{48};
  Rational k120{0};
  Rational k030{0};
  Rational lambda{4};

  // Value of kappa_{i,j,k} on the curve; throws for symbols not recorded.
  Rational kappa(int i, int j, int k) const;
};

// Evaluates a shift-free expression against curve data.
Rational evaluate_on_curve(const KappaExpr& e, const TestCurveData& d);

struct StuReport {
  struct Row {
    std::string name;
    Rational lhs;  // combination evaluated on the curve
    Rational rhs;  // stated multiple of lambda
    bool ok = false;
  };
  std::vector<Row> rows;
  bool all_ok = false;
};
StuReport verify_stu_identities(const TestCurveData& d = {});

}  // namespace ellchow
