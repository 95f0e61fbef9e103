#include "ellchow/quotient.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "ellchow/parallel.hpp"

namespace ellchow {

namespace {

constexpr int kSocleDegree = 16;

std::vector<std::pair<int, int>> monomials_of_degree(int d) {
  std::vector<std::pair<int, int>> out;
  for (int j = 0; 2 * j <= d; ++j) out.emplace_back(d - 2 * j, j);
  return out;
}

}  // namespace

DegreeSlice degree_slice(std::span<const BasePoly<Rational>> gens, int degree,
                         std::uint64_t basis_seed) {
  if (degree < 0) throw std::invalid_argument("degree_slice: negative degree");
  DegreeSlice s;
  s.degree = degree;
  s.monomial_basis = monomials_of_degree(degree);
  if (basis_seed != 0) {
    std::mt19937_64 rng(basis_seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(degree + 1)));
    std::shuffle(s.monomial_basis.begin(), s.monomial_basis.end(), rng);
  }
  std::map<std::pair<int, int>, size_t> index;
  for (size_t t = 0; t < s.monomial_basis.size(); ++t) index[s.monomial_basis[t]] = t;

  linalg::Mat rows;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    auto gd = g.homogeneous_degree();
    if (!gd) throw std::invalid_argument("degree_slice: generators must be homogeneous");
    if (degree < *gd) continue;
    for (auto [mi, mj] : monomials_of_degree(degree - *gd)) {
      linalg::Vec row(s.monomial_basis.size());
      for (const auto& [m, c] : g.terms()) row[index.at({m.first + mi, m.second + mj})] = c;
      rows.push_back(std::move(row));
    }
  }
  s.relation_subspace = linalg::rref(std::move(rows));
  s.quotient_dim = static_cast<int>(s.monomial_basis.size()) - s.relation_subspace.rank();
  size_t p = 0;
  for (int t = 0; t < static_cast<int>(s.monomial_basis.size()); ++t) {
    if (p < s.relation_subspace.pivots.size() && s.relation_subspace.pivots[p] == t)
      ++p;
    else
      s.quotient_basis.push_back(t);
  }
  return s;
}

HilbertData hilbert_function(std::span<const BasePoly<Rational>> gens, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("hilbert_function: negative max_degree");
  std::vector<BasePoly<Rational>> owned(gens.begin(), gens.end());
  HilbertData h;
  h.dims.assign(static_cast<size_t>(max_degree) + 1, 0);
  parallel_for(h.dims.size(), [&](std::size_t d) {
    h.dims[d] = degree_slice(owned, static_cast<int>(d)).quotient_dim;
  });
  return h;
}

HilbertData hilbert_function(const Relations& r, int max_degree) {
  const BasePoly<Rational> gens[] = {r.r1, r.r2};
  return hilbert_function(std::span<const BasePoly<Rational>>(gens), max_degree);
}

int socle_degree(const HilbertData& h) {
  for (int d = h.max_degree(); d >= 0; --d)
    if (h.dims[static_cast<size_t>(d)] != 0) return d;
  throw std::domain_error("socle_degree: all graded pieces vanish");
}

int complete_subvariety_bound(const HilbertData& h) { return socle_degree(h); }

PairingReport gorenstein_check(const Relations& r, std::uint64_t basis_seed) {
  const BasePoly<Rational> gens[] = {r.r1, r.r2};
  std::span<const BasePoly<Rational>> g(gens);

  std::vector<DegreeSlice> slices;
  slices.reserve(kSocleDegree + 1);
  for (int d = 0; d <= kSocleDegree; ++d) slices.push_back(degree_slice(g, d, basis_seed));

  PairingReport report;
  const DegreeSlice& top = slices[kSocleDegree];
  report.socle_dim = top.quotient_dim;
  if (report.socle_dim != 1) {
    report.verdict = false;
    return report;
  }
  const int socle_column = top.quotient_basis[0];
  std::map<std::pair<int, int>, size_t> top_index;
  for (size_t t = 0; t < top.monomial_basis.size(); ++t) top_index[top.monomial_basis[t]] = t;

  // Socle coordinate of the product of two monomials.
  auto pair_value = [&](std::pair<int, int> ma, std::pair<int, int> mb) {
    linalg::Vec v(top.monomial_basis.size());
    v[top_index.at({ma.first + mb.first, ma.second + mb.second})] = Rational(1);
    return linalg::reduce(top.relation_subspace, std::move(v))[static_cast<size_t>(socle_column)];
  };

  report.verdict = true;
  for (int i = 0; i <= kSocleDegree; ++i) {
    const DegreeSlice& si = slices[static_cast<size_t>(i)];
    const DegreeSlice& sj = slices[static_cast<size_t>(kSocleDegree - i)];
    PairingReport::Degree row;
    row.i = i;
    row.dim = si.quotient_dim;
    row.dual_dim = sj.quotient_dim;

    linalg::Mat pairing;
    pairing.reserve(static_cast<size_t>(si.quotient_dim));
    for (int a : si.quotient_basis) {
      linalg::Vec prow;
      prow.reserve(static_cast<size_t>(sj.quotient_dim));
      for (int b : sj.quotient_basis)
        prow.push_back(pair_value(si.monomial_basis[static_cast<size_t>(a)],
                                  sj.monomial_basis[static_cast<size_t>(b)]));
      pairing.push_back(std::move(prow));
    }
    row.pairing_rank = linalg::rank(std::move(pairing));
    if (row.dim != row.dual_dim || row.pairing_rank != row.dim) report.verdict = false;
    report.per_degree.push_back(row);
  }
  return report;
}

}  // namespace ellchow
