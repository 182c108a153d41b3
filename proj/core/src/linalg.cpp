#include "rcgeom/linalg.hpp"

#include "rcgeom/errors.hpp"

namespace rc {

std::vector<int> rref(Matrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Scalar inv = m[r][c].inverse();
    for (int j = c; j < cols; ++j)
      if (!m[r][j].is_zero()) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Scalar f = m[i][c];
      for (int j = c; j < cols; ++j)
        if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(Matrix m) { return static_cast<int>(rref(m).size()); }

std::vector<Vector> nullspace(Matrix m, int cols) {
  auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols, Scalar(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

Scalar det(Matrix m) {
  const int n = static_cast<int>(m.size());
  Scalar d(1);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    Scalar inv = m[c][c].inverse();
    for (int i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      Scalar f = m[i][c] * inv;
      for (int j = c; j < n; ++j)
        if (!m[c][j].is_zero()) m[i][j] -= f * m[c][j];
    }
  }
  return d;
}

std::optional<Vector> solve(Matrix m, const Vector& b) {
  const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(b[i]);
  auto pivots = rref(m);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  Vector x(cols, Scalar(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][cols];
  return x;
}

UniPoly det4(const std::array<PolyVec4, 4>& rows) { return det4(rows[0], rows[1], rows[2], rows[3]); }

PolyVec4 derivative(const PolyVec4& v) {
  return {v[0].derivative(), v[1].derivative(), v[2].derivative(), v[3].derivative()};
}

Vec4 eval(const PolyVec4& v, const Scalar& s) { return {v[0].eval(s), v[1].eval(s), v[2].eval(s), v[3].eval(s)}; }

}  // namespace rc
