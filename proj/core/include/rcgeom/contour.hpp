#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rcgeom/curve_map.hpp"
#include "rcgeom/roots.hpp"
#include "rcgeom/ruled_surface.hpp"

namespace rc {

/// Contour of a ruled surface from a viewpoint: the points whose tangent
/// plane passes through the viewpoint.
struct ContourCurve {
  CurveMap map;
  Vec4 viewpoint;
};

/// Central projection of a contour from its viewpoint onto a screen.
struct SilhouetteCurve {
  CurveMap map;
  Vec4 viewpoint;
  Plane screen;
};

/// c_a(s) = det[a,p,q,q̇] p − det[a,p,q,ṗ] q, before normalization.
PolyVec4 contour_formula(const RuledSurface& R, const Vec4& a);

/// Throws Degenerate (detail: the vanishing formula) when the contour
/// map is identically zero.
ContourCurve contour(const RuledSurface& R, const Vec4& a);

/// x ↦ (H·x) a − (H·a) x: the intersection of the line a∨x with H.
PolyVec4 project_from(const Vec4& a, const PolyVec4& x, const Plane& H);

/// Throws InvalidInput when the screen contains the viewpoint and
/// Degenerate when the projection collapses.
SilhouetteCurve silhouette(const ContourCurve& C, const Plane& screen);

/// Parameters where the tangent pencil along the ruling contains a
/// plane through both a and b.
struct MarkSet {
  /// Da_p·Db_q − Da_q·Db_p with D·_p = det[·,p,q,ṗ], D·_q = det[·,p,q,q̇].
  UniPoly determinant;
  /// ⟨ℓ_red(s), a∧b⟩: the regular-mark factor.
  UniPoly regular;
  /// Torsal factor of the reduced ruling curve.
  UniPoly torsal;
  std::vector<Root> regular_roots;
  /// Multiplicity of the regular mark at s = ∞.
  int at_infinity = 0;
  std::vector<Root> torsal_roots;

  /// Regular marks counted with multiplicity, including s = ∞.
  int regular_count() const;
};

MarkSet contour_mark_parameters(const RuledSurface& R, const Vec4& a, const Vec4& b);

/// det[p,ṗ,q,q̇] with the base-ruling factor gcd(ℓ)² removed.
UniPoly reduced_torsal_polynomial(const RuledSurface& R);

struct TorsalCusp {
  Root parameter;
  std::optional<Vec4> exact;  // set when the parameter is Gaussian rational
  ApproxPoint approx;
};

struct CuspReport {
  std::vector<TorsalCusp> cusps;
  std::vector<std::string> warnings;  // singular rulings skipped
};

/// The cuspidal point λ2 p(s0) + λ4 q(s0) of every torsal ruling, with
/// (λ1..λ4) spanning the kernel of [p, ṗ, q, q̇] at s0.
CuspReport torsal_cusps(const RuledSurface& R);

/// Plane conic: the section of the quadric G by the plane H.
struct Conic {
  QuadricForm G;
  Plane H;
};

/// Contour of a quadric from a: Q ∩ polar plane of a.
Conic conic_contour(const QuadricForm& Q, const Vec4& a);
/// Tangent cone from a: Q(a) Q(x) − B(a, x)².
QuadricForm tangent_cone(const QuadricForm& Q, const Vec4& a);
/// Silhouette of a quadric from a on a screen: tangent cone ∩ screen.
Conic conic_silhouette(const QuadricForm& Q, const Vec4& a, const Plane& screen);

/// Affine samples (s, x1/x0, x2/x0, x3/x0) at n equally spaced real
/// parameters in [from, to]; points at infinity give NaN coordinates.
std::vector<std::array<double, 4>> sample_curve(const CurveMap& c, double from, double to, int n);
void write_samples_csv(std::ostream& os, const std::vector<std::array<double, 4>>& rows);
std::vector<std::array<double, 4>> read_samples_csv(std::istream& is);

}  // namespace rc
