#pragma once

#include <gmpxx.h>

#include <complex>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace rc {

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator (GMP canonical form).
using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// Exact element of Q(i). Real data lives in the real subfield; the
/// imaginary part only becomes nonzero for Gaussian-rational roots and
/// complex-coefficient surfaces.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : re_(v) {}   // NOLINT(google-explicit-constructor)
  Scalar(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  /// Field norm re² + im².
  Rational norm() const { return re_ * re_ + im_ * im_; }
  Scalar inverse() const;

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Canonical text: "3/4", "-2", "1/2+3i", "-i".
std::string to_string(const Scalar& x);
Scalar parse_scalar(std::string_view text);
std::ostream& operator<<(std::ostream& os, const Scalar& x);

/// Best rational approximation with denominator <= max_den, if it lies
/// within `tol` of x.
std::optional<Rational> rationalize(double x, double tol, long max_den);

struct RationalizeOptions {
  double tolerance = 1e-8;
  long max_denominator = 1'000'000;
};

std::optional<Scalar> rationalize(std::complex<double> z, const RationalizeOptions& opt = {});

/// Factor f such that f*x_k is a primitive vector of Gaussian integers
/// whose first nonzero entry is a positive integer. Returns 1 for the
/// zero vector.
Scalar canonical_scale(std::span<const Scalar> xs);

}  // namespace rc
