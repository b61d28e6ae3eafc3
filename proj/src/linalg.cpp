#include "nkgeo/linalg.hpp"

#include <stdexcept>

namespace nkgeo {

bool AffineSolutionSet::all_satisfy(const RVector& c, const Rational& d) const {
  if (!consistent) return true;  // vacuous over the empty set
  Rational acc = d;
  for (std::size_t i = 0; i < c.size(); ++i) acc += c[i] * particular[i];
  if (acc != 0) return false;
  for (const RVector& v : basis) {
    Rational dir = 0;
    for (std::size_t i = 0; i < c.size(); ++i) dir += c[i] * v[i];
    if (dir != 0) return false;
  }
  return true;
}

std::vector<std::size_t> rref(RMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t sel = row;
    while (sel < rows && m[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[row]);
    Rational inv = Rational(1) / m[row][col];
    for (std::size_t c = col; c < cols; ++c) m[row][c] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<RVector> nullspace(const RMatrix& a) {
  if (a.empty()) return {};
  RMatrix m = a;
  const std::size_t cols = m[0].size();
  std::vector<std::size_t> pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<RVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RVector v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

AffineSolutionSet solve_linear(const RMatrix& a, const RVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve: size mismatch");
  AffineSolutionSet out;
  if (a.empty()) {
    out.consistent = true;
    return out;
  }
  const std::size_t cols = a[0].size();
  RMatrix aug = a;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
  std::vector<std::size_t> pivots = rref(aug);
  // Inconsistent iff a pivot lands in the augmented column.
  if (!pivots.empty() && pivots.back() == cols) return out;
  out.consistent = true;
  out.particular.assign(cols, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r)
    out.particular[pivots[r]] = aug[r][cols];
  out.basis = nullspace(a);
  return out;
}

}  // namespace nkgeo
