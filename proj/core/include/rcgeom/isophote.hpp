#pragma once

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "rcgeom/bipoly.hpp"
#include "rcgeom/projective.hpp"
#include "rcgeom/ruled_surface.hpp"
#include "rcgeom/unipoly.hpp"

namespace rc {

using PolyVec3 = std::array<UniPoly, 3>;
using Vec3 = std::array<Scalar, 3>;

/// X(s, t) = P(s) + t q̄(s) in affine space.
struct AffineRuledSurface {
  PolyVec3 P;
  PolyVec3 qbar;

  /// Throws InvalidInput when q̄ ≡ 0.
  AffineRuledSurface(PolyVec3 P, PolyVec3 qbar);

  /// Chart of a projective ruled surface: q̄ is the ruling direction
  /// p0 q − q0 p and P the point λp + μq with λp0 + μq0 = 1. Throws
  /// Degenerate when p0 and q0 share a root (a ruling lies at infinity)
  /// or the whole surface lies in x0 = 0.
  static AffineRuledSurface from_projective(const RuledSurface& R);
  /// p = (1, P), q = (0, q̄).
  RuledSurface to_projective(bool allow_developable = false) const;
  bool is_real() const;
};

/// n(s, t) = n1(s) + t n2(s) = ∂_s X × ∂_t X.
struct NormalField {
  PolyVec3 n1;  // P′ × q̄
  PolyVec3 n2;  // q̄′ × q̄
};
NormalField normal_field(const AffineRuledSurface& R);

struct IsophoteSpec {
  Vec3 direction;
  Scalar alpha;
  /// Permit a non-real α or α² > 1.
  bool allow_complex = false;
  /// Throws InvalidInput on a zero direction or an unpermitted α.
  void validate() const;
};

/// Primitive part (content in s removed, canonical scale) of
/// (n·a)² − α²(a·a)(n·n) as a polynomial in (u = s, v = t). Throws
/// Degenerate when it vanishes identically.
BiPoly isophote_curve(const AffineRuledSurface& R, const IsophoteSpec& spec);

/// (n1·n2)² − (n1·n1)(n2·n2).
UniPoly pn_discriminant(const AffineRuledSurface& R);

struct OffsetReport {
  bool reducible = false;
  UniPoly discriminant;
  /// σ with n·n = c·σ² when reducible.
  std::optional<BiPoly> sigma;
  Scalar sigma_scale;
  /// Common factor f of the components of n (a polynomial in s).
  UniPoly common_factor;
};
OffsetReport offset_reducibility(const AffineRuledSurface& R);
bool is_offset_reducible(const AffineRuledSurface& R);
/// Quadric path: a regular quadric has reducible offsets iff it is a sphere.
bool is_offset_reducible(const QuadricForm& Q);

/// True when R is a degree-2 surface whose quadric is a sphere.
bool is_sphere_surface(const RuledSurface& R);

/// deg R − k − 1. Throws Degenerate for developable surfaces and for
/// the sphere (whose isophotes are reducible).
int isophote_genus(const RuledSurface& R);
/// Quadric path, read off the conic Q ∩ ω: 1 when it is regular, 0 when
/// it is a line pair (paraboloids). Throws Degenerate for singular
/// quadrics and for the sphere.
int isophote_genus(const QuadricForm& Q);
/// 2(deg R − k).
int ramification_count(const RuledSurface& R);
/// deg R − k.
int real_component_bound(const RuledSurface& R);

/// Sphere, or q̄ / gcd(q̄) has coordinates of degree ≤ 1.
bool rational_isophote_criterion(const AffineRuledSurface& R);

/// Numeric cross-check of the ramification count: parameters where the
/// ruling's point at infinity d(s) (the ω-section) is tangent to the
/// normal-direction conic nᵀAn = 0, A = aaᵀ − α²|a|²I, i.e. the roots
/// of d(s)ᵀ adj(A) d(s) on the projective line.
struct TangencyReport {
  UniPoly polynomial;
  std::vector<std::complex<double>> roots;  // after merging
  int at_infinity = 0;
  int count = 0;
  int expected = 0;
  double merge_tolerance = 1e-7;
};
TangencyReport tangency_count(const RuledSurface& R, const IsophoteSpec& spec, double merge_tolerance = 1e-7);

/// Real points of the isophote over s ∈ [from, to] (n samples), solving
/// the quadratic in t at each s. Rows are (s, t, x, y, z).
std::vector<std::array<double, 5>> isophote_trace(const AffineRuledSurface& R, const BiPoly& curve, double from,
                                                  double to, int n);

}  // namespace rc
