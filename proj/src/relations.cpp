#include "ellchow/relations.hpp"

#include <stdexcept>

#include "ellchow/chern.hpp"
#include "ellchow/linalg.hpp"

namespace ellchow {

namespace {

template <class C>
std::pair<BasePoly<C>, BasePoly<C>> push_top_chern(const BundleDescriptor<C>& factors) {
  BundleElement<C> top = top_chern(factors);
  BasePoly<C> r1 = pushforward(top);
  BasePoly<C> r2 = pushforward(top * BundleElement<C>::z());
  return {std::move(r1), std::move(r2)};
}

template <class C>
BundleDescriptor<C> concat(BundleDescriptor<C> a, BundleDescriptor<C> b) {
  a.insert(a.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
  return a;
}

struct Row {
  int i, j;
  std::vector<long long> asc;  // coefficient of N^k at index k
};

BasePoly<UniPoly> from_rows(const std::vector<Row>& rows) {
  BasePoly<UniPoly> p;
  for (const Row& r : rows) {
    std::vector<Rational> c;
    c.reserve(r.asc.size());
    for (long long v : r.asc) c.emplace_back(v);
    p.add_term({r.i, r.j}, UniPoly(std::move(c)));
  }
  return p;
}

}  // namespace

SymbolicRelations derive_relations() {
  auto factors = concat(principal_parts_factors(3, 4), principal_parts_factors(5, 6));
  auto [r1, r2] = push_top_chern<UniPoly>(factors);
  return {std::move(r1), std::move(r2)};
}

Relations derive_relations(long n) {
  auto factors = concat(principal_parts_factors(3, 4, n), principal_parts_factors(5, 6, n));
  auto [r1, r2] = push_top_chern<Rational>(factors);
  return {n, std::move(r1), std::move(r2)};
}

Relations specialize(const SymbolicRelations& s, long n) {
  return {n, specialize_at(s.r1, n), specialize_at(s.r2, n)};
}

const SymbolicRelations& reference_pushforwards() {
  static const SymbolicRelations ref = [] {
    // clang-format off
    const std::vector<Row> raw1 = {
        {1, 4, {0, 8847360, -139567104, 813809664, -2427125760, 4164009984,
                -4277919744, 2598469632, -859963392, 119439360}},
        {3, 3, {46522368, -813809664, 4854251520, -13880033280, 21389598720,
                -18189287424, 8026324992, -1433272320}},
        {5, 2, {-485425152, 4164009984, -12833759232, 18189287424,
                -12039487488, 3009871872}},
        {7, 1, {611131392, -2598469632, 3439853568, -1433272320}},
        {9, 0, {-95551488, 119439360}},
    };
    const std::vector<Row> raw2 = {
        {0, 5, {0, 0, -4423680, 46522368, -203452416, 485425152, -694001664,
                611131392, -324808704, 95551488, -11943936}},
        {2, 4, {4423680, -139567104, 1220714496, -4854251520, 10410024960,
                -12833759232, 9094643712, -3439853568, 537477120}},
        {4, 3, {-203452416, 2427125760, -10410024960, 21389598720,
                -22736609280, 12039487488, -2508226560}},
        {6, 2, {694001664, -4277919744, 9094643712, -8026324992, 2508226560}},
        {8, 1, {-324808704, 859963392, -537477120}},
        {10, 0, {11943936}},
    };
    // clang-format on
    return SymbolicRelations{from_rows(raw1), from_rows(raw2)};
  }();
  return ref;
}

const SymbolicRelations& reference_simplified() {
  static const SymbolicRelations ref = [] {
    // clang-format off
    const std::vector<Row> p1 = {
        {9, 0, {-1296, 1620}},
        {7, 1, {8289, -35244, 46656, -19440}},
        {5, 2, {-6584, 56478, -174069, 246708, -163296, 40824}},
        {3, 3, {631, -11038, 65840, -188260, 290115, -246708, 108864, -19440}},
        {1, 4, {0, 120, -1893, 11038, -32920, 56478, -58023, 35244, -11664, 1620}},
    };
    const std::vector<Row> p2 = {
        {10, 0, {324}},
        {8, 1, {-8811, 23328, -14580}},
        {6, 2, {18826, -116046, 246708, -217728, 68040}},
        {4, 3, {-5519, 65840, -282390, 580230, -616770, 326592, -68040}},
        {2, 4, {120, -3786, 33114, -131680, 282390, -348138, 246708, -93312, 14580}},
        {0, 5, {0, 0, -120, 1262, -5519, 13168, -18826, 16578, -8811, 2592, -324}},
    };
    // clang-format on
    return SymbolicRelations{from_rows(p1), from_rows(p2)};
  }();
  return ref;
}

namespace {

void diff_one(int which, const BasePoly<UniPoly>& got, const BasePoly<UniPoly>& expected,
              std::vector<GoldenMismatch>& out) {
  auto keys_of = [](const BasePoly<UniPoly>& p) {
    std::vector<std::pair<int, int>> k;
    for (const auto& [m, c] : p.terms()) k.push_back(m);
    return k;
  };
  std::vector<std::pair<int, int>> keys = keys_of(expected);
  for (auto m : keys_of(got))
    if (expected.coeff(m.first, m.second).is_zero()) keys.push_back(m);
  for (auto [i, j] : keys) {
    UniPoly e = expected.coeff(i, j);
    UniPoly g = got.coeff(i, j);
    if (e != g) out.push_back({which, i, j, std::move(e), std::move(g)});
  }
}

}  // namespace

GoldenReport golden_compare(const SymbolicRelations& s) {
  GoldenReport report;
  const SymbolicRelations& ref = reference_pushforwards();
  diff_one(1, s.r1, ref.r1, report.mismatches);
  diff_one(2, s.r2, ref.r2, report.mismatches);
  return report;
}

namespace {

// Monomials (i, j) with i + 2j = d, i descending.
std::vector<std::pair<int, int>> monomials_of_degree(int d) {
  std::vector<std::pair<int, int>> out;
  for (int j = 0; 2 * j <= d; ++j) out.emplace_back(d - 2 * j, j);
  return out;
}

// Rows spanning the degree-d slice of the ideal generated by gens.
linalg::Mat slice_rows(std::span<const BasePoly<Rational>> gens, int d) {
  const auto basis = monomials_of_degree(d);
  std::map<std::pair<int, int>, size_t> index;
  for (size_t t = 0; t < basis.size(); ++t) index[basis[t]] = t;
  linalg::Mat rows;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    auto gd = g.homogeneous_degree();
    if (!gd) throw std::invalid_argument("ideal slice: generators must be homogeneous");
    if (d < *gd) continue;
    for (auto [mi, mj] : monomials_of_degree(d - *gd)) {
      linalg::Vec row(basis.size());
      for (const auto& [m, c] : g.terms()) row[index.at({m.first + mi, m.second + mj})] = c;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace

bool ideal_equal(std::span<const BasePoly<Rational>> a, std::span<const BasePoly<Rational>> b,
                 int max_degree) {
  for (int d = 0; d <= max_degree; ++d) {
    linalg::Mat ra = slice_rows(a, d);
    linalg::Mat rb = slice_rows(b, d);
    int rank_a = linalg::rank(ra);
    int rank_b = linalg::rank(rb);
    if (rank_a != rank_b) return false;
    linalg::Mat stacked = ra;
    stacked.insert(stacked.end(), rb.begin(), rb.end());
    if (linalg::rank(std::move(stacked)) != rank_a) return false;
  }
  return true;
}

bool ideal_equal(const Relations& a, const Relations& b, int max_degree) {
  if (a.n != b.n) throw std::invalid_argument("ideal_equal: relation sets specialized at different n");
  const BasePoly<Rational> ga[] = {a.r1, a.r2};
  const BasePoly<Rational> gb[] = {b.r1, b.r2};
  return ideal_equal(std::span<const BasePoly<Rational>>(ga),
                     std::span<const BasePoly<Rational>>(gb), max_degree);
}

}  // namespace ellchow
