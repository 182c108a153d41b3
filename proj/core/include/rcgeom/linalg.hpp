#pragma once

#include <array>
#include <optional>
#include <vector>

#include "rcgeom/scalar.hpp"
#include "rcgeom/unipoly.hpp"

namespace rc {

using Vector = std::vector<Scalar>;
using Matrix = std::vector<Vector>;  // row-major

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<int> rref(Matrix& m);
int rank(Matrix m);
/// Basis of {x : m x = 0}; `cols` is needed when m has no rows.
std::vector<Vector> nullspace(Matrix m, int cols);
Scalar det(Matrix m);
/// Some solution of m x = b, if the system is consistent.
std::optional<Vector> solve(Matrix m, const Vector& b);

using Vec4 = std::array<Scalar, 4>;
using PolyVec4 = std::array<UniPoly, 4>;

/// Determinant of a 3x3 array over any commutative ring type.
template <class T>
T det3(const T& a00, const T& a01, const T& a02, const T& a10, const T& a11, const T& a12, const T& a20,
       const T& a21, const T& a22) {
  return a00 * (a11 * a22 - a12 * a21) - a01 * (a10 * a22 - a12 * a20) + a02 * (a10 * a21 - a11 * a20);
}

/// Coefficients u of the linear form w ↦ det[w, x, y, z] (rows).
/// For points this is the plane through x, y, z.
template <class T>
std::array<T, 4> join3(const std::array<T, 4>& x, const std::array<T, 4>& y, const std::array<T, 4>& z) {
  std::array<T, 4> u;
  for (int k = 0; k < 4; ++k) {
    int c[3], n = 0;
    for (int j = 0; j < 4; ++j)
      if (j != k) c[n++] = j;
    T minor = det3(x[c[0]], x[c[1]], x[c[2]], y[c[0]], y[c[1]], y[c[2]], z[c[0]], z[c[1]], z[c[2]]);
    u[k] = (k % 2 == 0) ? minor : T() - minor;
  }
  return u;
}

template <class T>
T dot4(const std::array<T, 4>& u, const std::array<T, 4>& x) {
  return u[0] * x[0] + u[1] * x[1] + u[2] * x[2] + u[3] * x[3];
}

/// det[w, x, y, z] with the four arguments as rows.
template <class T>
T det4(const std::array<T, 4>& w, const std::array<T, 4>& x, const std::array<T, 4>& y,
       const std::array<T, 4>& z) {
  return dot4(join3(x, y, z), w);
}

/// Exact cofactor expansion of a 4x4 polynomial matrix.
UniPoly det4(const std::array<PolyVec4, 4>& rows);

PolyVec4 derivative(const PolyVec4& v);
Vec4 eval(const PolyVec4& v, const Scalar& s);

}  // namespace rc
