#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "rcgeom/contour.hpp"
#include "rcgeom/projective.hpp"
#include "rcgeom/random.hpp"

namespace rc {

/// The cone a#C joining a with the conic C = G ∩ H:
/// F(x) = G(H(a) x − H(x) a). Throws Degenerate when a ∈ H or the conic
/// is degenerate (restricted form of rank < 3).
QuadricForm cone_over_conic(const Vec4& a, const QuadricForm& G, const Plane& H);

/// Rank of the form G restricted to the plane H.
int restricted_rank(const QuadricForm& G, const Plane& H);

/// λF + μH²: every member has the conic as contour from the viewpoint.
struct QuadricPencil {
  QuadricForm F;  // the cone a#C
  Plane H;
  Vec4 viewpoint;

  QuadricForm member(const Scalar& lambda, const Scalar& mu) const;
};

QuadricPencil quadric_pencil_from_contour(const Conic& C, const Vec4& a);

struct ContourConic {
  Conic conic;
  Vec4 viewpoint;
};

/// Unique quadric with both contours. Throws Inconsistent ("inconsistent
/// contours") when the two pencils share no quadric and Degenerate
/// ("indeterminate") when they share more than one.
QuadricForm quadric_from_two_contours(const ContourConic& c1, const ContourConic& c2);

/// Silhouette conic: `conic.G ∩ conic.H` where H is the screen.
struct SilhouetteConic {
  Conic conic;
  Vec4 viewpoint;
};

struct ThreeSilhouetteReport {
  QuadricForm quadric;
  /// Contour planes H_a, H_b, H_c recovered from the line pairs.
  std::array<Plane, 3> contour_planes;
  /// Numeric intersection points {p, q} = C_a ∩ C_b, {r, s} = C_a ∩ C_c,
  /// {·,·} = C_b ∩ C_c (diagnostics only).
  std::array<std::array<ApproxPoint, 2>, 3> point_pairs;
};

ThreeSilhouetteReport quadric_from_three_silhouettes(const SilhouetteConic& s1, const SilhouetteConic& s2,
                                                     const SilhouetteConic& s3);

/// Numeric complex 4x4 symmetric matrix.
using ComplexForm = std::array<std::array<std::complex<double>, 4>, 4>;
ComplexForm to_complex(const QuadricForm& Q);

/// The second member of the one-parameter family of quadrics sharing the
/// silhouettes of Q from a and b: P = G_a + (α1 H_a + β1 H_b)² with
/// α1² − β1² = 1, where Q = G_a + H_a² = G_b + H_b², H_x the polar plane of
/// x scaled by Q(x)^(-1/2) and G_x the tangent cone over Q(x).
ComplexForm silhouette_family_member(const QuadricForm& Q, const Vec4& a, const Vec4& b, double alpha1);

/// Tangent cone Q(a) Q − (Qa)(Qa)ᵀ of a numeric form.
ComplexForm tangent_cone(const ComplexForm& Q, const Vec4& a);

/// n numeric points on the conic G ∩ H (complex in general).
std::vector<ApproxPoint> sample_conic(const Conic& C, int n, Rng& rng);

/// Relative value |F(x)| / (‖F‖ ‖x‖²).
double relative_residual(const ComplexForm& F, const ApproxPoint& x);

}  // namespace rc
