#pragma once

// Independent oracles shared by the unit tests and the acceptance
// binary. Each recomputes a quantity by a route that does not go
// through the library function it is used to check.

#include <algorithm>
#include <vector>

#include "rcgeom/bipoly.hpp"
#include "rcgeom/hompoly.hpp"
#include "rcgeom/linalg.hpp"
#include "rcgeom/random.hpp"
#include "rcgeom/ruled_surface.hpp"
#include "rcgeom/unipoly.hpp"

namespace rc::oracle {

/// Implicitization: the least d for which some nonzero form of degree d
/// vanishes on 120 random exact surface points; -1 above max_degree.
inline int implicit_degree(const RuledSurface& R, Rng& rng, int max_degree) {
  std::vector<Vec4> pts;
  while (pts.size() < 120) {
    const Vec4 x = R.point(Scalar(rng.rational(9, 4)), Scalar(rng.rational(9, 4)), Scalar(rng.rational(9, 4)));
    if (!is_zero(x)) pts.push_back(x);
  }
  for (int d = 1; d <= max_degree; ++d) {
    const auto mons = monomials(d);
    Matrix m;
    for (const auto& x : pts) {
      Vector row;
      for (const auto& e : mons) {
        Scalar v(1);
        for (int j = 0; j < 4; ++j)
          for (int k = 0; k < e[j]; ++k) v *= x[j];
        row.push_back(v);
      }
      m.push_back(row);
    }
    if (!nullspace(m, static_cast<int>(mons.size())).empty()) return d;
  }
  return -1;
}

/// Degree of the ω-section computed directly from w = p0 q − q0 p.
inline int omega_curve_degree(const RuledSurface& R) {
  const PolyVec4 &p = R.p().components(), &q = R.q().components();
  PolyVec4 w;
  UniPoly g;
  for (int j = 1; j < 4; ++j) {
    w[j] = p[0] * q[j] - q[0] * p[j];
    g = poly_gcd(g, w[j]);
  }
  int d = -1;
  for (int j = 1; j < 4; ++j)
    if (!w[j].is_zero()) d = std::max(d, exact_div(w[j], g).degree());
  return d;
}

/// Genus of an isophote A t² + 2B t + C = 0 (u = s, v = t) as a double
/// cover of the s-line: (#branch points)/2 − 1, the branch points being
/// the odd-multiplicity roots of the discriminant on the projective line.
/// Returns -1 when the curve is not quadratic in t.
inline int double_cover_genus(const BiPoly& I) {
  const auto c = I.v_coeffs();
  if (c.size() != 3) return -1;
  const UniPoly disc = c[1] * c[1] - 4 * c[0] * c[2];
  int branch = 0, deg = 0;
  const auto parts = square_free_decomposition(disc);
  for (std::size_t m = 0; m < parts.size(); ++m) {
    deg += static_cast<int>(m + 1) * parts[m].degree();
    if ((m + 1) % 2 == 1) branch += parts[m].degree();
  }
  // Homogenized to even degree: an odd degree puts a branch point at s = ∞.
  if (deg % 2 == 1) ++branch;
  return branch / 2 - 1;
}

}  // namespace rc::oracle
