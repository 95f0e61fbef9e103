#include "ellchow/kappa.hpp"

#include <sstream>
#include <stdexcept>

namespace ellchow {

const FiberConstants& FiberConstants::k3() {
  static const FiberConstants fc{};
  return fc;
}

int KappaSymbol::codimension() const {
  switch (kind) {
    case Kind::unit:
      return 0;
    case Kind::lambda:
      return 1;
    case Kind::kappa:
      return i + j + 2 * k - 2;
  }
  return 0;
}

std::string KappaSymbol::str() const {
  switch (kind) {
    case Kind::unit:
      return "1";
    case Kind::lambda:
      return "lambda";
    case Kind::kappa: {
      std::ostringstream os;
      os << "kappa_{" << i << ',' << j << ',' << k << '}';
      return os.str();
    }
  }
  return {};
}

namespace {

// Fiberwise value of a codimension-0 kappa symbol.
Rational codim0_value(int i, int j, int k, const FiberConstants& fc) {
  if (i == 2 && j == 0 && k == 0) return fc.sigma_sq;
  if (i == 1 && j == 1 && k == 0) return fc.sigma_dot_f;
  if (i == 0 && j == 2 && k == 0) return fc.f_sq;
  if (i == 0 && j == 0 && k == 1) return fc.c2_integral;
  throw std::logic_error("codim0_value: unexpected symbol");
}

}  // namespace

KappaExpr KappaExpr::unit(Rational c) {
  KappaExpr e;
  e.add_term(KappaSymbol{}, ShiftPoly::constant(std::move(c)));
  return e;
}

KappaExpr KappaExpr::lambda() {
  KappaExpr e;
  e.add_term(KappaSymbol{KappaSymbol::Kind::lambda}, ShiftPoly::one());
  return e;
}

KappaExpr KappaExpr::kappa(int i, int j, int k, const FiberConstants& fc) {
  if (i < 0 || j < 0 || k < 0)
    throw std::invalid_argument("KappaExpr::kappa: negative exponent");
  int codim = i + j + 2 * k - 2;
  if (codim < 0) return {};
  if (codim == 0) return unit(codim0_value(i, j, k, fc));
  KappaExpr e;
  e.add_term(KappaSymbol{KappaSymbol::Kind::kappa, i, j, k}, ShiftPoly::one());
  return e;
}

void KappaExpr::add_term(const KappaSymbol& s, ShiftPoly c) {
  if (c.is_zero()) return;
  auto it = t_.find(s);
  if (it == t_.end()) {
    t_.emplace(s, std::move(c));
  } else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

bool KappaExpr::has_shift_variables() const {
  for (const auto& [s, c] : t_)
    for (const auto& [m, v] : c.terms())
      if (m.first != 0 || m.second != 0) return true;
  return false;
}

bool KappaExpr::is_homogeneous_of_codim(int codim) const {
  for (const auto& [s, c] : t_)
    if (!c.is_homogeneous_of(codim - s.codimension())) return false;
  return true;
}

KappaExpr KappaExpr::operator-() const {
  KappaExpr e;
  for (const auto& [s, c] : t_) e.t_.emplace(s, -c);
  return e;
}

KappaExpr& KappaExpr::operator+=(const KappaExpr& o) {
  for (const auto& [s, c] : o.t_) add_term(s, c);
  return *this;
}

KappaExpr& KappaExpr::operator-=(const KappaExpr& o) {
  for (const auto& [s, c] : o.t_) add_term(s, -c);
  return *this;
}

KappaExpr operator*(const Rational& s, const KappaExpr& e) {
  KappaExpr out;
  for (const auto& [sym, c] : e.terms()) out.add_term(sym, s * c);
  return out;
}

std::string KappaExpr::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << '(';
    bool cfirst = true;
    for (const auto& [m, v] : c.terms()) {
      if (!cfirst) os << " + ";
      cfirst = false;
      os << v.str();
      if (m.first > 0) {
        os << "*l";
        if (m.first > 1) os << '^' << m.first;
      }
      if (m.second > 0) {
        os << "*l'";
        if (m.second > 1) os << '^' << m.second;
      }
    }
    os << ")*" << s.str();
  }
  return os.str();
}

namespace {

std::vector<std::vector<Rational>> binomial_table(int max_n) {
  std::vector<std::vector<Rational>> c(static_cast<size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) {
    c[static_cast<size_t>(n)].assign(static_cast<size_t>(n) + 1, Rational(1));
    for (int r = 1; r < n; ++r)
      c[static_cast<size_t>(n)][static_cast<size_t>(r)] =
          c[static_cast<size_t>(n - 1)][static_cast<size_t>(r - 1)] +
          c[static_cast<size_t>(n - 1)][static_cast<size_t>(r)];
  }
  return c;
}

}  // namespace

KappaExpr shift_expand(const KappaExpr& e, bool shift_sigma, bool shift_f,
                       const FiberConstants& fc) {
  if (e.has_shift_variables())
    throw std::invalid_argument("shift_expand: expression already contains shift variables");
  KappaExpr out;
  for (const auto& [sym, coeff] : e.terms()) {
    if (sym.kind != KappaSymbol::Kind::kappa) {
      // The unit and lambda live on the base; the substitution fixes them.
      out.add_term(sym, coeff);
      continue;
    }
    const int i = sym.i, j = sym.j, k = sym.k;
    auto binom = binomial_table(std::max(i, j));
    const int s_lo = shift_sigma ? 0 : i;
    const int t_lo = shift_f ? 0 : j;
    for (int s = s_lo; s <= i; ++s) {
      for (int t = t_lo; t <= j; ++t) {
        int codim = s + t + 2 * k - 2;
        if (codim < 0) continue;
        // (sigma + pi^* l')^i (f + pi^* l)^j expands to
        // C(i,s) C(j,t) l'^(i-s) l^(j-t) kappa_{s,t,k}.
        Rational factor = binom[static_cast<size_t>(i)][static_cast<size_t>(s)] *
                          binom[static_cast<size_t>(j)][static_cast<size_t>(t)];
        ShiftPoly shift = ShiftPoly::monomial(j - t, i - s, factor);
        KappaSymbol target{KappaSymbol::Kind::kappa, s, t, k};
        if (codim == 0) {
          out.add_term(KappaSymbol{}, (codim0_value(s, t, k, fc) * shift) * coeff);
        } else {
          out.add_term(target, shift * coeff);
        }
      }
    }
  }
  return out;
}

KappaExpr substitute_shifts(const KappaExpr& e, const Rational& l, const Rational& lp) {
  KappaExpr out;
  for (const auto& [sym, coeff] : e.terms()) {
    Rational value;
    for (const auto& [m, v] : coeff.terms()) {
      Rational term = v;
      for (int p = 0; p < m.first; ++p) term *= l;
      for (int p = 0; p < m.second; ++p) term *= lp;
      value += term;
    }
    out.add_term(sym, ShiftPoly::constant(value));
  }
  return out;
}

const std::vector<InvariantCombination>& invariant_combinations() {
  static const std::vector<InvariantCombination> combos = [] {
    const Rational quarter(1, 4);
    std::vector<InvariantCombination> c;
    c.push_back({"kappa_{3,0,0} + 1/4 kappa_{1,0,1}",
                 KappaExpr::kappa(3, 0, 0) + quarter * KappaExpr::kappa(1, 0, 1),
                 Rational(7, 2)});
    c.push_back({"3 kappa_{2,1,0} - 1/4 kappa_{1,0,1} + 1/4 kappa_{0,1,1}",
                 Rational(3) * KappaExpr::kappa(2, 1, 0) -
                     quarter * KappaExpr::kappa(1, 0, 1) +
                     quarter * KappaExpr::kappa(0, 1, 1),
                 Rational(1, 2)});
    c.push_back({"3 kappa_{1,2,0} - 1/4 kappa_{0,1,1}",
                 Rational(3) * KappaExpr::kappa(1, 2, 0) - quarter * KappaExpr::kappa(0, 1, 1),
                 Rational(-3)});
    c.push_back({"kappa_{0,3,0}", KappaExpr::kappa(0, 3, 0), Rational(0)});
    return c;
  }();
  return combos;
}

InvarianceReport verify_invariance(const FiberConstants& fc) {
  InvarianceReport report;
  report.all_ok = true;
  for (const auto& combo : invariant_combinations()) {
    InvarianceReport::Row row;
    row.name = combo.name;
    row.residual = shift_expand(combo.expr, true, true, fc) - combo.expr;
    row.ok = row.residual.is_zero();
    if (!row.ok) report.all_ok = false;
    report.rows.push_back(std::move(row));
  }
  return report;
}

Rational TestCurveData::kappa(int i, int j, int k) const {
  if (i == 3 && j == 0 && k == 0) return k300;
  if (i == 1 && j == 0 && k == 1) return k101;
  if (i == 2 && j == 1 && k == 0) return k210;
  if (i == 0 && j == 1 && k == 1) return k011;
  if (i == 1 && j == 2 && k == 0) return k120;
  if (i == 0 && j == 3 && k == 0) return k030;
  throw std::invalid_argument("TestCurveData: value not recorded for this kappa symbol");
}

Rational evaluate_on_curve(const KappaExpr& e, const TestCurveData& d) {
  if (e.has_shift_variables())
    throw std::invalid_argument("evaluate_on_curve: expression contains shift variables");
  Rational value;
  for (const auto& [sym, coeff] : e.terms()) {
    Rational c = coeff.coeff(0, 0);
    switch (sym.kind) {
      case KappaSymbol::Kind::unit:
        value += c;
        break;
      case KappaSymbol::Kind::lambda:
        value += c * d.lambda;
        break;
      case KappaSymbol::Kind::kappa:
        value += c * d.kappa(sym.i, sym.j, sym.k);
        break;
    }
  }
  return value;
}

StuReport verify_stu_identities(const TestCurveData& d) {
  StuReport report;
  report.all_ok = true;
  for (const auto& combo : invariant_combinations()) {
    StuReport::Row row;
    row.name = combo.name;
    row.lhs = evaluate_on_curve(combo.expr, d);
    row.rhs = combo.lambda_multiple * d.lambda;
    row.ok = (row.lhs == row.rhs);
    if (!row.ok) report.all_ok = false;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace ellchow
