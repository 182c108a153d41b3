#pragma once

#include <vector>

#include "rcgeom/hompoly.hpp"
#include "rcgeom/linalg.hpp"

namespace rc {

/// One surface F = Σ H_i G_i of the target degree containing the curve
/// {G_i = 0} as a contour from a, with the syzygy multipliers.
struct SyzygySolution {
  std::vector<HomPoly> H;
  std::vector<HomPoly> L;
  HomPoly F;
  /// F lies in the span of known reducible solutions: products G_i G_j
  /// times forms, and lower-degree solutions times forms.
  bool spurious = false;
};

struct SyzygyResult {
  /// A basis of the solution space in F, spurious elements first.
  std::vector<SyzygySolution> solutions;
  /// Dimension of the spurious subspace.
  int spurious_dimension = 0;
};

/// Solves Σ H_i (Σ_j a_j ∂G_i/∂x_j) − Σ L_i G_i ≡ 0 with deg H_i = d − deg G_i
/// and deg L_i = d − 1 − deg G_i. An empty result is valid.
SyzygyResult syzygy_surfaces(const std::vector<HomPoly>& G, const Vec4& a, int d);

/// Σ H_i D_a G_i − Σ L_i G_i for checking a solution.
HomPoly syzygy_residual(const std::vector<HomPoly>& G, const Vec4& a, const SyzygySolution& sol);

}  // namespace rc
