#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rcgeom/bilinear.hpp"
#include "rcgeom/bipoly.hpp"
#include "rcgeom/curve_map.hpp"
#include "rcgeom/mobius.hpp"
#include "rcgeom/roots.hpp"
#include "rcgeom/ruled_surface.hpp"

namespace rc {

/// Correspondence curves between two contours (u on c_a, v on c_b):
/// E1 = det[c_a(u), ċ_a(u), a, c_b(v)], E2 = det[c_b(v), ċ_b(v), b, c_a(u)].
std::pair<BiPoly, BiPoly> correspondence_curves(const CurveMap& c_a, const Vec4& a, const CurveMap& c_b,
                                                const Vec4& b);

struct RuledCandidate {
  BilinearFactor factor;
  MobiusTransform psi;  // u ↦ v
  std::optional<RuledSurface> surface;
  bool consistent = false;  // both contours reproduced
  std::string note;
};

struct TwoContourReport {
  BiPoly delta;  // gcd(E1, E2)
  std::vector<RuledCandidate> candidates;
  /// Index of the accepted candidate.
  int accepted = -1;
  const RuledSurface& surface() const { return *candidates.at(accepted).surface; }
};

/// Throws Inconsistent ("no consistent ruled surface") when no bilinear
/// factor of Δ reproduces both contours, and Degenerate when more than
/// one does (all candidates are listed in the error detail).
TwoContourReport ruled_from_two_contours(const CurveMap& c_a, const Vec4& a, const CurveMap& c_b, const Vec4& b);

/// c_a = det[a,b,s_b,ṡ_b] s_a − det[s_a,b,s_b,ṡ_b] a and the a↔b analogue.
/// Throws Degenerate when a lift vanishes identically.
std::pair<CurveMap, CurveMap> lift_silhouette_pair(const CurveMap& s_a, const Vec4& a, const CurveMap& s_b,
                                                   const Vec4& b);

/// A mark on one silhouette: parameter and point (exact when Gaussian rational).
struct SilhouetteMark {
  Root parameter;
  std::optional<Vec4> exact;
  ApproxPoint approx;
};

struct TwoSilhouetteReport {
  UniPoly marks_a_polynomial, marks_b_polynomial;  // det[b,a,s_a,ṡ_a], det[a,b,s_b,ṡ_b]
  UniPoly cusps_a, cusps_b;                        // removed cusp factors
  std::vector<SilhouetteMark> marks_a, marks_b;    // P and Q
  /// ⟨line(a, p_i), line(b, q_j)⟩.
  std::vector<std::vector<std::complex<double>>> pairing;
  std::vector<std::vector<std::optional<Scalar>>> pairing_exact;
  std::vector<std::pair<int, int>> matching;  // (i, j)
  MobiusTransform phi = MobiusTransform::identity();  // s on S_a ↦ u on S_b
  CurveMap c_a, c_b;
  std::optional<RuledSurface> surface;
  std::vector<std::string> warnings;
};

TwoSilhouetteReport ruled_from_two_silhouettes(const CurveMap& s_a, const Vec4& a, const CurveMap& s_b,
                                               const Vec4& b);

/// Mutual membership of n seeded sample points (and equal degree).
bool same_surface(const RuledSurface& R1, const RuledSurface& R2, Rng& rng, int samples = 50);

}  // namespace rc
