#pragma once

#include <optional>
#include <vector>

#include "rcgeom/bipoly.hpp"
#include "rcgeom/mobius.hpp"

namespace rc {

/// The bilinear form α11·uv − α10·u + α01·v − α00, i.e. the graph of
/// v = (α10 u + α00) / (α11 u + α01).
struct BilinearFactor {
  Scalar a11, a10, a01, a00;

  BiPoly poly() const;
  MobiusTransform as_mobius() const;  // u ↦ v
  static BilinearFactor from_mobius(const MobiusTransform& m);
  BilinearFactor canonical() const;
  friend bool operator==(const BilinearFactor& x, const BilinearFactor& y);
};

/// Every non-degenerate bilinear factor (graph of a Möbius map u ↦ v)
/// dividing F, each verified exactly; those with α11 ≠ 0 come first.
/// Factors are taken over the coefficient field of F: Q for real F,
/// Q(i) otherwise.
std::vector<BilinearFactor> bilinear_factors(const BiPoly& F);

/// The first of bilinear_factors(F), if any. F must be nonzero.
std::optional<BilinearFactor> bilinear_factor(const BiPoly& F);

}  // namespace rc
