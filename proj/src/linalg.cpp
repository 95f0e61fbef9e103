#include "ellchow/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace ellchow {
namespace linalg {

Rref rref(Mat m) {
  Rref out;
  if (m.empty()) return out;
  const size_t ncols = m[0].size();
  for (const auto& row : m)
    if (row.size() != ncols) throw std::invalid_argument("rref: ragged matrix");

  size_t r = 0;
  for (size_t c = 0; c < ncols && r < m.size(); ++c) {
    size_t p = r;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    Rational inv = Rational(1) / m[r][c];
    for (size_t k = c; k < ncols; ++k) m[r][k] *= inv;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Rational f = m[i][c];
      for (size_t k = c; k < ncols; ++k) m[i][k] -= f * m[r][k];
    }
    out.pivots.push_back(static_cast<int>(c));
    ++r;
  }
  out.rows.assign(m.begin(), m.begin() + static_cast<long>(r));
  return out;
}

int rank(Mat m) { return rref(std::move(m)).rank(); }

Vec reduce(const Rref& r, Vec v) {
  for (size_t i = 0; i < r.rows.size(); ++i) {
    const size_t c = static_cast<size_t>(r.pivots[i]);
    if (v[c].is_zero()) continue;
    Rational f = v[c];
    const Vec& row = r.rows[i];
    for (size_t k = 0; k < v.size(); ++k) v[k] -= f * row[k];
  }
  return v;
}

}  // namespace linalg
}  // namespace ellchow
