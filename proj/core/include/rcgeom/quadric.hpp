#pragma once

#include <array>

#include "rcgeom/projective.hpp"

namespace rc {

/// Gauss map x ↦ (∂F/∂x0 : … : ∂F/∂x3)(x) = 2 M x. Throws InvalidInput
/// when x is not on Q and Degenerate at a singular point.
Vec4 gauss_map(const QuadricForm& Q, const ProjPoint& x);

/// Normal map: the Gauss map followed by dropping the first coordinate.
std::array<Scalar, 3> normal_map(const QuadricForm& Q, const ProjPoint& x);

/// Orthogonal-to-everything check: u annihilates every tangent
/// direction of Q at x, i.e. u ∝ M x.
bool is_tangent_plane(const QuadricForm& Q, const ProjPoint& x, const Plane& u);

}  // namespace rc
