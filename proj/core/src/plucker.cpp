#include "rcgeom/plucker.hpp"

#include "rcgeom/errors.hpp"

namespace rc {

Scalar plucker_relation(const std::array<Scalar, 6>& c) { return c[0] * c[3] + c[1] * c[4] + c[2] * c[5]; }

PluckerLine::PluckerLine(std::array<Scalar, 6> coords) : c_(std::move(coords)) {
  bool zero = true;
  for (const auto& x : c_) zero = zero && x.is_zero();
  if (zero) fail(ErrorKind::InvalidInput, "reconstruct", "Plücker coordinates are all zero");
  if (!plucker_relation(c_).is_zero())
    fail(ErrorKind::InvalidInput, "reconstruct", "coordinates violate the Plücker relation");
}

PluckerLine PluckerLine::through(const Vec4& p, const Vec4& q) {
  auto c = wedge(p, q);
  bool zero = true;
  for (const auto& x : c) zero = zero && x.is_zero();
  if (zero) fail(ErrorKind::Degenerate, "reconstruct", "line through coincident points");
  return PluckerLine(c);
}

bool PluckerLine::contains(const Vec4& x) const {
  // x lies on the line iff it meets every line through x; test with the
  // four lines joining x to the coordinate points.
  for (int k = 0; k < 4; ++k) {
    Vec4 e{0, 0, 0, 0};
    e[k] = 1;
    if (!plucker_pairing(c_, wedge(x, e)).is_zero()) return false;
  }
  return true;
}

bool PluckerLine::same_line(const PluckerLine& o) const {
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (c_[i] * o.c_[j] != c_[j] * o.c_[i]) return false;
  return true;
}

std::string PluckerLine::to_string() const {
  std::string s = "(";
  for (int k = 0; k < 6; ++k) s += (k ? ", " : "") + rc::to_string(c_[k]);
  return s + ")";
}

Scalar plucker_pairing(const PluckerLine& x, const PluckerLine& y) { return plucker_pairing(x.coords(), y.coords()); }

}  // namespace rc
