#include "rcgeom/quadric.hpp"

#include "rcgeom/errors.hpp"

namespace rc {

Vec4 gauss_map(const QuadricForm& Q, const ProjPoint& x) {
  if (is_zero(x)) fail(ErrorKind::InvalidInput, "surface", "zero point");
  if (!Q.eval(x).is_zero()) fail(ErrorKind::InvalidInput, "surface", "point is not on the quadric", format_point(x));
  Vec4 g = Q.polar(x);
  if (is_zero(g)) fail(ErrorKind::Degenerate, "surface", "singular point of the quadric", format_point(x));
  for (auto& c : g) c *= Scalar(2);
  return g;
}

std::array<Scalar, 3> normal_map(const QuadricForm& Q, const ProjPoint& x) {
  const Vec4 g = gauss_map(Q, x);
  return {g[1], g[2], g[3]};
}

bool is_tangent_plane(const QuadricForm& Q, const ProjPoint& x, const Plane& u) {
  return proportional(Q.polar(x), u);
}

}  // namespace rc
