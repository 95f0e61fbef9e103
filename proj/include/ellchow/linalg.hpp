#pragma once

#include <vector>

#include "ellchow/rational.hpp"

namespace ellchow {
namespace linalg {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

// Reduced row-echelon form over Q: unit pivots, zeros above and below,
// zero rows dropped. pivots[r] is the column of row r's pivot.
struct Rref {
  Mat rows;
  std::vector<int> pivots;
  int rank() const { return static_cast<int>(pivots.size()); }
};

Rref rref(Mat m);
int rank(Mat m);

// Residual of v modulo the row space: clears every pivot coordinate, leaving
// a vector supported on non-pivot columns. v maps to zero iff it lies in the
// row space; non-pivot coordinates are the induced quotient coordinates.
Vec reduce(const Rref& r, Vec v);

}  // namespace linalg
}  // namespace ellchow
