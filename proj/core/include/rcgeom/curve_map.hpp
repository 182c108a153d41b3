#pragma once

#include <string>

#include "rcgeom/linalg.hpp"
#include "rcgeom/mobius.hpp"
#include "rcgeom/projective.hpp"

namespace rc {

/// Rational map s ↦ (x0(s) : x1(s) : x2(s) : x3(s)) from the projective
/// line. Normalized on construction: the common polynomial factor of
/// the components is removed and the coefficients are scaled to
/// primitive Gaussian integers, so proportional maps compare equal.
class CurveMap {
 public:
  CurveMap() = default;
  explicit CurveMap(PolyVec4 x);

  const PolyVec4& components() const { return x_; }
  const UniPoly& operator[](int j) const { return x_[j]; }
  /// Homogeneous degree: the largest component degree.
  int degree() const;
  bool is_constant() const;

  Vec4 eval(const Scalar& s) const;
  /// Value at s = ∞ (the degree-`degree()` coefficients).
  Vec4 at_infinity() const;
  Vec4 eval(const ParamValue& s) const;
  ApproxPoint eval(std::complex<double> s) const;
  PolyVec4 derivative() const { return rc::derivative(x_); }

  /// s ↦ x(φ(s)), homogenized and renormalized.
  CurveMap reparameterize(const MobiusTransform& phi) const;
  /// Whether the image lies in the plane u.
  bool lies_in(const Plane& u) const;

  friend bool operator==(const CurveMap& a, const CurveMap& b) { return a.x_ == b.x_; }
  std::string to_string(char var = 's') const;

 private:
  PolyVec4 x_;
};

/// Plane-pairing u · x(s) as a polynomial.
UniPoly dot(const Plane& u, const PolyVec4& x);

/// Normalized PolyVec4: common factor removed, primitive coefficients.
PolyVec4 normalize(const PolyVec4& x);

}  // namespace rc
