#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "rcgeom/scalar.hpp"
#include "rcgeom/unipoly.hpp"

namespace rc {

/// Numeric complex value with a certified error radius: the disc of
/// radius `radius` around `value` contains the exact quantity.
struct ComplexApprox {
  std::complex<double> value;
  double radius = 0.0;
};

/// A distinct root of a polynomial. `exact` is set when the root is a
/// Gaussian rational (verified by exact substitution).
struct Root {
  ComplexApprox approx;
  std::optional<Scalar> exact;
  int multiplicity = 1;
};

inline constexpr double kRootRadius = 1e-10;

/// All complex roots, repeated according to multiplicity. Throws
/// InvalidInput on the zero polynomial; constants have no roots.
std::vector<ComplexApprox> complex_roots(const UniPoly& f);

/// Distinct roots with multiplicities and the Gaussian-rational fast path.
std::vector<Root> roots(const UniPoly& f, const RationalizeOptions& opt = {});

/// The Gaussian-rational roots of f only (distinct, exact).
std::vector<Scalar> exact_roots(const UniPoly& f, const RationalizeOptions& opt = {});

}  // namespace rc
