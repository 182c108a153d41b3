#include "rcgeom/curve_map.hpp"

#include <algorithm>

#include "rcgeom/errors.hpp"

namespace rc {

PolyVec4 normalize(const PolyVec4& x) {
  UniPoly g;
  for (const auto& c : x) g = poly_gcd(g, c);
  if (g.is_zero()) fail(ErrorKind::Degenerate, "surface", "curve map with all components zero");
  PolyVec4 y;
  std::vector<Scalar> coeffs;
  int deg = 0;
  for (int j = 0; j < 4; ++j) {
    y[j] = exact_div(x[j], g);
    deg = std::max(deg, y[j].degree());
  }
  // Scale by the leading coefficients first (descending degree, then
  // component order) so the representative does not depend on input scale.
  for (int k = deg; k >= 0; --k)
    for (int j = 0; j < 4; ++j) coeffs.push_back(y[j].coeff(k));
  const Scalar f = canonical_scale(coeffs);
  for (auto& c : y) c *= f;
  return y;
}

CurveMap::CurveMap(PolyVec4 x) : x_(normalize(x)) {}

int CurveMap::degree() const {
  int d = 0;
  for (const auto& c : x_) d = std::max(d, c.degree());
  return d;
}

bool CurveMap::is_constant() const { return degree() == 0; }

Vec4 CurveMap::eval(const Scalar& s) const { return rc::eval(x_, s); }

Vec4 CurveMap::at_infinity() const {
  const int d = degree();
  return {x_[0].coeff(d), x_[1].coeff(d), x_[2].coeff(d), x_[3].coeff(d)};
}

Vec4 CurveMap::eval(const ParamValue& s) const { return s.infinite ? at_infinity() : eval(s.value); }

ApproxPoint CurveMap::eval(std::complex<double> s) const {
  return {x_[0].eval(s), x_[1].eval(s), x_[2].eval(s), x_[3].eval(s)};
}

CurveMap CurveMap::reparameterize(const MobiusTransform& phi) const {
  const int d = degree();
  PolyVec4 y;
  for (int j = 0; j < 4; ++j) y[j] = phi.pullback(x_[j], d);
  return CurveMap(y);
}

bool CurveMap::lies_in(const Plane& u) const { return dot(u, x_).is_zero(); }

std::string CurveMap::to_string(char var) const {
  return "(" + x_[0].to_string(var) + " : " + x_[1].to_string(var) + " : " + x_[2].to_string(var) + " : " +
         x_[3].to_string(var) + ")";
}

UniPoly dot(const Plane& u, const PolyVec4& x) {
  UniPoly acc;
  for (int j = 0; j < 4; ++j)
    if (!u[j].is_zero()) acc += x[j] * u[j];
  return acc;
}

}  // namespace rc
