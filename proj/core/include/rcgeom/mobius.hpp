#pragma once

#include <array>
#include <complex>
#include <string>
#include <utility>

#include "rcgeom/scalar.hpp"
#include "rcgeom/unipoly.hpp"

namespace rc {

/// A point of the projective parameter line: a finite value or ∞.
struct ParamValue {
  Scalar value;
  bool infinite = false;

  static ParamValue at_infinity() { return {Scalar(0), true}; }
  friend bool operator==(const ParamValue& x, const ParamValue& y) {
    return x.infinite == y.infinite && (x.infinite || x.value == y.value);
  }
};

std::string to_string(const ParamValue& p);

/// s ↦ (a s + b) / (c s + d) with ad − bc ≠ 0.
class MobiusTransform {
 public:
  MobiusTransform(Scalar a, Scalar b, Scalar c, Scalar d);
  static MobiusTransform identity() { return {Scalar(1), Scalar(0), Scalar(0), Scalar(1)}; }

  const Scalar& a() const { return a_; }
  const Scalar& b() const { return b_; }
  const Scalar& c() const { return c_; }
  const Scalar& d() const { return d_; }

  ParamValue apply(const ParamValue& s) const;
  Scalar apply(const Scalar& s) const;  // throws Degenerate at the pole
  std::complex<double> apply(std::complex<double> s) const;
  MobiusTransform inverse() const;
  /// (this ∘ other)(s) = this(other(s)).
  MobiusTransform compose(const MobiusTransform& other) const;
  /// Scaled to primitive Gaussian-integer coefficients.
  MobiusTransform canonical() const;
  /// f(φ(s))·(c s + d)^degree, the homogenized pull-back.
  UniPoly pullback(const UniPoly& f, int degree) const;

  friend bool operator==(const MobiusTransform& x, const MobiusTransform& y);
  std::string to_string(char var = 's') const;

 private:
  Scalar a_, b_, c_, d_;
};

/// The unique transform with φ(source_k) = target_k, k = 1..3. Throws
/// Degenerate when sources or targets repeat.
MobiusTransform mobius_from_three_pairs(const std::array<std::pair<ParamValue, ParamValue>, 3>& pairs);

/// Numeric variant: solved in floating point and rationalized; throws
/// Degenerate when the pairs repeat or the result is not close to a
/// transform with small Gaussian-rational coefficients.
MobiusTransform mobius_from_three_pairs(
    const std::array<std::pair<std::complex<double>, std::complex<double>>, 3>& pairs,
    const RationalizeOptions& opt = {});

}  // namespace rc
