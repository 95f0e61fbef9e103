#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ellchow/linalg.hpp"
#include "ellchow/relations.hpp"

namespace ellchow {

// One weighted degree of the quotient Q[a1, c2] / (gens): the monomial
// basis of the degree, the row-reduced span of the monomial multiples of
// the generators landing there, and the induced quotient dimension.
struct DegreeSlice {
  int degree = 0;
  std::vector<std::pair<int, int>> monomial_basis;  // i + 2j = degree, i descending
  linalg::Rref relation_subspace;                   // rows in monomial coordinates
  std::vector<int> quotient_basis;                  // indices of non-pivot monomials
  int quotient_dim = 0;
};

// basis_seed != 0 shuffles the monomial order before elimination; the
// resulting quotient data describes the same space in a different basis.
DegreeSlice degree_slice(std::span<const BasePoly<Rational>> gens, int degree,
                         std::uint64_t basis_seed = 0);

struct HilbertData {
  std::vector<int> dims;  // dims[d] = dim of the degree-d graded piece
  int max_degree() const { return static_cast<int>(dims.size()) - 1; }
  // False when the top computed degree is still nonzero, i.e. no vanishing
  // was witnessed inside the window.
  bool bounded_in_window() const { return !dims.empty() && dims.back() == 0; }
};

HilbertData hilbert_function(std::span<const BasePoly<Rational>> gens, int max_degree);
HilbertData hilbert_function(const Relations& r, int max_degree);

// Largest degree with a nonzero graded piece; throws std::domain_error when
// every computed dimension is zero.
int socle_degree(const HilbertData& h);

// Largest d for which a d-fold power of an ample class can survive in the
// presentation; equals the socle degree (= max_degree when unbounded in the
// window).
int complete_subvariety_bound(const HilbertData& h);

struct PairingReport {
  struct Degree {
    int i = 0;
    int dim = 0;           // dim of the degree-i piece
    int dual_dim = 0;      // dim of the complementary piece
    int pairing_rank = 0;  // rank of the multiplication pairing into the socle
  };
  std::vector<Degree> per_degree;
  int socle_dim = 0;  // dimension in degree 16; must be 1
  bool verdict = false;
};

// Perfectness of the pairing A^i x A^(16-i) -> A^16 for every i: quotient
// bases are the non-pivot monomials, products are reduced modulo the
// degree-16 relation subspace, and the socle coordinate of a class is its
// coefficient on the unique surviving monomial.
PairingReport gorenstein_check(const Relations& r, std::uint64_t basis_seed = 0);

}  // namespace ellchow
