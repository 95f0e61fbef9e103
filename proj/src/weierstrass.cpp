#include "ellchow/weierstrass.hpp"

#include <stdexcept>
#include <utility>

namespace ellchow {

WeierstrassPair WeierstrassPair::from_coeff_lists(long n, std::vector<Rational> a,
                                                  std::vector<Rational> b) {
  if (n < 1) throw std::invalid_argument("WeierstrassPair: n must be >= 1");
  if (static_cast<long>(a.size()) != 4 * n + 1)
    throw std::invalid_argument("WeierstrassPair: A must have exactly 4n+1 coefficients");
  if (static_cast<long>(b.size()) != 6 * n + 1)
    throw std::invalid_argument("WeierstrassPair: B must have exactly 6n+1 coefficients");
  return {n, UniPoly(std::move(a)), UniPoly(std::move(b))};
}

long vanishing_order_at(const UniPoly& p, const Rational& q) {
  if (p.is_zero()) return kInfiniteOrder;
  UniPoly linear = UniPoly::linear(-q, Rational(1));
  UniPoly rest = p;
  long order = 0;
  for (;;) {
    auto [quotient, remainder] = rest.divmod(linear);
    if (!remainder.is_zero()) return order;
    ++order;
    rest = std::move(quotient);
  }
}

long vanishing_order_at_infinity(const UniPoly& p, long form_degree) {
  if (p.is_zero()) return kInfiniteOrder;
  return form_degree - p.degree();
}

UniPoly discriminant(const WeierstrassPair& w) {
  UniPoly a3 = w.A * w.A * w.A;
  UniPoly b2 = w.B * w.B;
  return Rational(4) * a3 + Rational(27) * b2;
}

UniPoly multiplicity_locus(const UniPoly& p, long m) {
  if (m < 1) throw std::invalid_argument("multiplicity_locus: m must be >= 1");
  if (p.is_zero()) return {};
  UniPoly g = p.monic();
  UniPoly d = p;
  for (long k = 1; k < m && g.degree() > 0; ++k) {
    d = d.derivative();
    g = UniPoly::gcd(g, d);
  }
  return g;
}

namespace {

// Common locus where v(A) >= ma and v(B) >= mb, decided without factoring.
struct CommonLocus {
  bool exists = false;
  bool at_infinity = false;
  std::optional<Rational> point;
  std::optional<UniPoly> factor;
  long order_a = 0, order_b = 0;
};

CommonLocus find_common_locus(const WeierstrassPair& w, long ma, long mb) {
  CommonLocus out;
  // Infinity first: the degree drop of each form.
  long va = vanishing_order_at_infinity(w.A, w.form_degree_a());
  long vb = vanishing_order_at_infinity(w.B, w.form_degree_b());
  if (va >= ma && vb >= mb) {
    out.exists = true;
    out.at_infinity = true;
    out.order_a = va;
    out.order_b = vb;
    return out;
  }
  UniPoly la = multiplicity_locus(w.A, ma);
  UniPoly lb = multiplicity_locus(w.B, mb);
  UniPoly common;
  if (la.is_zero())
    common = lb;  // A vanishes identically: every point qualifies for A
  else if (lb.is_zero())
    common = la;
  else
    common = UniPoly::gcd(la, lb);
  if (common.is_zero()) {
    // Both forms identically zero: witness any point.
    out.exists = true;
    out.point = Rational(0);
    out.order_a = kInfiniteOrder;
    out.order_b = kInfiniteOrder;
    return out;
  }
  if (common.degree() == 0) return out;  // no finite common point
  out.exists = true;
  if (common.degree() == 1) {
    // common is monic t + c: root is -c.
    Rational root = -common.coeff(0);
    out.point = root;
    out.order_a = vanishing_order_at(w.A, root);
    out.order_b = vanishing_order_at(w.B, root);
  } else {
    out.factor = common;
    out.order_a = ma;  // guaranteed lower bounds at the (non-rational) points
    out.order_b = mb;
  }
  return out;
}

void record_witness(std::vector<Witness>& ws, const char* condition, const CommonLocus& loc) {
  Witness w;
  w.condition = condition;
  w.at_infinity = loc.at_infinity;
  w.point = loc.point;
  w.common_factor = loc.factor;
  w.order_a = loc.order_a;
  w.order_b = loc.order_b;
  ws.push_back(std::move(w));
}

}  // namespace

ConditionReport check_conditions(const WeierstrassPair& w) {
  ConditionReport report;
  report.in_delta1 = discriminant(w).is_zero();
  report.discriminant_ok = !report.in_delta1;

  CommonLocus nonminimal = find_common_locus(w, 4, 6);
  report.minimal = !nonminimal.exists;
  if (nonminimal.exists) record_witness(report.witnesses, "minimality", nonminimal);

  CommonLocus unstable = find_common_locus(w, 2 * w.n, 3 * w.n);
  report.stable = !unstable.exists;
  if (unstable.exists) record_witness(report.witnesses, "stability", unstable);

  CommonLocus nonsemistable = find_common_locus(w, 2 * w.n + 1, 3 * w.n + 1);
  report.semistable = !nonsemistable.exists;
  if (nonsemistable.exists) record_witness(report.witnesses, "semistability", nonsemistable);

  return report;
}

long delta1_codimension(long n) {
  if (n < 1) throw std::invalid_argument("delta1_codimension: n must be >= 1");
  long pair_dim = (4 * n + 1) + (6 * n + 1);
  long locus_dim = 2 * n + 1;
  return pair_dim - locus_dim;
}

}  // namespace ellchow
