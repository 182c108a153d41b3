#pragma once

#include <array>
#include <string>

#include "rcgeom/curve_map.hpp"
#include "rcgeom/projective.hpp"
#include "rcgeom/random.hpp"

namespace rc {

enum class RulingClass { Regular, Torsal, Singular };
std::string_view to_string(RulingClass c);

using PluckerCurve = std::array<UniPoly, 6>;

/// r(s, t0, t1) = t0 p(s) + t1 q(s).
class RuledSurface {
 public:
  /// Throws InvalidInput when p and q are proportional maps, and
  /// Degenerate when the surface is developable unless permitted.
  RuledSurface(CurveMap p, CurveMap q, bool allow_developable = false);

  const CurveMap& p() const { return p_; }
  const CurveMap& q() const { return q_; }
  Vec4 point(const Scalar& s, const Scalar& t0, const Scalar& t1) const;

  /// ℓ(s) = p(s) ∧ q(s) as computed from the stored directrices.
  const PluckerCurve& plucker() const { return l_; }
  /// ℓ divided by the gcd of its six components (no base rulings).
  const PluckerCurve& reduced_plucker() const { return lr_; }
  /// Homogeneous degree of the reduced Plücker curve.
  int ruling_degree() const { return n_; }

  std::string to_string() const;

 private:
  CurveMap p_, q_;
  PluckerCurve l_, lr_;
  int n_ = 0;
};

/// Plane x ↦ t0 det[x,p,q,ṗ] + t1 det[x,p,q,q̇] at parameter s. Throws
/// Degenerate when it vanishes (singular point or singular ruling).
Plane tangent_plane(const RuledSurface& R, const Scalar& s, const Scalar& t0, const Scalar& t1);

/// Rank of [p, ṗ, q, q̇] at s: 4 regular, 3 torsal, 2 singular. Throws
/// Degenerate when p(s) ∝ q(s) (base-point ruling).
RulingClass classify_ruling(const RuledSurface& R, const Scalar& s);

/// det[p, ṗ, q, q̇]; its roots are the torsal and singular parameters.
UniPoly torsal_polynomial(const RuledSurface& R);
bool is_developable(const RuledSurface& R);

/// Degree of the implicit surface: the number of rulings met by a
/// seeded random line, i.e. the roots on the projective line of
/// ⟨ℓ_red(s), L⟩. Throws Degenerate if five random lines all lie on R.
int surface_degree(const RuledSurface& R, Rng& rng);

/// Number k of rulings in the plane at infinity x0 = 0, with multiplicity.
int infinite_rulings_count(const RuledSurface& R);

/// The section by x0 = 0 with rulings removed: s ↦ (0 : D1 : D2 : D3).
/// Its degree is deg R − k.
PolyVec4 omega_section(const RuledSurface& R);

/// Exact point-set membership in the closure of the parameterized surface.
bool contains(const RuledSurface& R, const Vec4& x);

/// The quadratic form of a degree-2 ruled surface (exact null vector of
/// the linear system Q(p) ≡ B(p, q) ≡ Q(q) ≡ 0). Throws Degenerate if
/// the surface is not a quadric.
QuadricForm implicit_quadric(const RuledSurface& R);

/// Standard test object: t0 (1 : s : 0 : 0) + t1 (0 : 0 : 1 : s), the
/// quadric x0 x3 − x1 x2 = 0.
RuledSurface standard_quadric();

}  // namespace rc
