#pragma once

#include <array>
#include <complex>
#include <string>
#include <string_view>

#include "rcgeom/hompoly.hpp"
#include "rcgeom/linalg.hpp"

namespace rc {

/// Homogeneous point (x0 : x1 : x2 : x3); not all coordinates zero.
using ProjPoint = Vec4;
/// Linear form u0 x0 + ... + u3 x3; not all coefficients zero.
using Plane = Vec4;
/// Numeric point, used where coordinates are irrational.
using ApproxPoint = std::array<std::complex<double>, 4>;

/// Parses "1:2:1:2" (colon- or comma-separated, four exact scalars).
ProjPoint parse_point(std::string_view text);
std::string format_point(const Vec4& x);

bool is_zero(const Vec4& x);
/// x = λ y for some nonzero λ (both nonzero).
bool proportional(const Vec4& x, const Vec4& y);
/// Scaled to primitive Gaussian integers, first nonzero entry positive.
Vec4 canonical(const Vec4& x);
ApproxPoint to_approx(const Vec4& x);
/// Projective distance between two numeric points: the sine of the
/// angle between the representing vectors.
double projective_distance(const ApproxPoint& x, const ApproxPoint& y);

/// Symmetric 4x4 form x ↦ xᵀ M x.
class QuadricForm {
 public:
  QuadricForm();  // zero form
  explicit QuadricForm(Matrix m);
  /// The ten upper-triangle entries m00 m01 m02 m03 m11 m12 m13 m22 m23 m33.
  static QuadricForm from_upper(const std::array<Scalar, 10>& e);
  static QuadricForm from_hompoly(const HomPoly& f);
  /// u uᵀ: the double plane u²(x).
  static QuadricForm square(const Plane& u);

  const Matrix& matrix() const { return m_; }
  const Scalar& operator()(int i, int j) const { return m_[i][j]; }
  std::array<Scalar, 10> upper() const;
  HomPoly to_hompoly() const;

  bool is_zero() const;
  Scalar eval(const Vec4& x) const;
  Scalar bilinear(const Vec4& x, const Vec4& y) const;
  std::complex<double> eval(const ApproxPoint& x) const;
  /// Polar plane of a: M a.
  Plane polar(const Vec4& a) const;
  int rank() const;
  /// Scaled to primitive Gaussian integers (first nonzero upper entry positive).
  QuadricForm canonical() const;
  /// Equality up to a nonzero scalar.
  bool proportional(const QuadricForm& o) const;
  /// Regular quadric through the absolute conic (x0 = 0, x1²+x2²+x3² = 0):
  /// a sphere with any centre and real or imaginary radius.
  bool is_sphere() const;

  QuadricForm& operator+=(const QuadricForm& o);
  QuadricForm& operator*=(const Scalar& c);
  friend QuadricForm operator+(QuadricForm a, const QuadricForm& b) { return a += b; }
  friend QuadricForm operator*(const Scalar& c, QuadricForm a) { return a *= c; }
  friend bool operator==(const QuadricForm& a, const QuadricForm& b) { return a.m_ == b.m_; }

  std::string to_string() const;

 private:
  Matrix m_;
};

}  // namespace rc
