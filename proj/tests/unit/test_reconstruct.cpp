#include <gtest/gtest.h>

#include <complex>

#include "rcgeom/contour.hpp"
#include "rcgeom/plucker.hpp"
#include "rcgeom/quadric_reconstruct.hpp"
#include "rcgeom/ruled_reconstruct.hpp"
#include "rcgeom/syzygy.hpp"
#include "test_support.hpp"

namespace rc {
namespace {

using namespace rc::testing;

// ---------------------------------------------------------------- helpers

QuadricForm random_regular_quadric(Rng& rng) {
  for (;;) {
    std::array<Scalar, 10> e;
    for (auto& c : e) c = Scalar(rng.uniform(-4, 4));
    const QuadricForm Q = QuadricForm::from_upper(e);
    if (Q.rank() == 4) return Q;
  }
}

Vec4 random_point_off(const QuadricForm& Q, Rng& rng) {
  for (;;) {
    const Vec4 a = random_point(rng);
    if (!Q.eval(a).is_zero()) return a;
  }
}

/// Whether f is an exact linear combination of the basis (same degree).
bool in_span(const std::vector<HomPoly>& basis, const HomPoly& f) {
  const auto mons = monomials(f.degree());
  Matrix m(mons.size(), Vector(basis.size()));
  Vector rhs(mons.size());
  for (std::size_t r = 0; r < mons.size(); ++r) {
    for (std::size_t c = 0; c < basis.size(); ++c) m[r][c] = basis[c].coeff(mons[r]);
    rhs[r] = f.coeff(mons[r]);
  }
  return solve(m, rhs).has_value();
}

double max_abs(const ComplexForm& F) {
  double m = 0;
  for (const auto& row : F)
    for (const auto& x : row) m = std::max(m, std::abs(x));
  return m;
}

/// Relative distance between two numeric forms up to a complex scalar.
double form_distance(const ComplexForm& A, const ComplexForm& B) {
  std::complex<double> num = 0;
  double den = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      num += std::conj(B[i][j]) * A[i][j];
      den += std::norm(B[i][j]);
    }
  const std::complex<double> lambda = num / den;
  double err = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) err = std::max(err, std::abs(A[i][j] - lambda * B[i][j]));
  return err / max_abs(A);
}

// ---------------------------------------------------------------- Plücker

TEST(Plucker, AxisLinesAreSkew) {
  const PluckerLine x = PluckerLine::through({1, 0, 0, 0}, {0, 1, 0, 0});
  const PluckerLine y = PluckerLine::through({0, 0, 1, 0}, {0, 0, 0, 1});
  EXPECT_FALSE(plucker_pairing(x, y).is_zero());
  EXPECT_TRUE(x.contains({1, 1, 0, 0}));
  EXPECT_FALSE(x.contains({1, 1, 1, 0}));
}

TEST(Plucker, RejectsNonLines) {
  EXPECT_THROW(PluckerLine({1, 0, 0, 1, 0, 0}), Error);  // p01 p23 ≠ 0
  EXPECT_THROW(PluckerLine({0, 0, 0, 0, 0, 0}), Error);
  EXPECT_THROW(PluckerLine::through({1, 2, 3, 4}, {2, 4, 6, 8}), Error);
}

TEST(PluckerProperty, RelationPairingAndIncidence) {
  Rng rng(kDefaultSeed + 20);
  for (int n = 0; n < 100; ++n) {
    const Vec4 p = random_point(rng), q = random_point(rng), r = random_point(rng), u = random_point(rng);
    if (proportional(p, q) || proportional(p, r)) continue;
    const PluckerLine L = PluckerLine::through(p, q);
    EXPECT_TRUE(plucker_relation(L.coords()).is_zero());
    EXPECT_TRUE(plucker_pairing(L, L).is_zero());
    // Coplanar: both lines pass through p.
    EXPECT_TRUE(plucker_pairing(L, PluckerLine::through(p, r)).is_zero());
    // Same line from other points of it.
    Vec4 m;
    for (int j = 0; j < 4; ++j) m[j] = p[j] + Scalar(3) * q[j];
    EXPECT_TRUE(L.same_line(PluckerLine::through(m, q)));
    // Skew: the pairing is det[p, q, r, u].
    if (proportional(r, u)) continue;
    EXPECT_EQ(plucker_pairing(L, PluckerLine::through(r, u)).is_zero(), det4(p, q, r, u).is_zero());
  }
}

// ---------------------------------------------------------------- quadrics

TEST(ConeOverConic, VertexAndConicOnCone) {
  Rng rng(kDefaultSeed + 21);
  for (int n = 0; n < 10; ++n) {
    const QuadricForm Q = random_regular_quadric(rng);
    const Vec4 a = random_point_off(Q, rng);
    const Conic C = conic_contour(Q, a);
    const QuadricForm F = cone_over_conic(a, C.G, C.H);
    EXPECT_TRUE(F.eval(a).is_zero());
    EXPECT_TRUE(is_zero(F.polar(a)));
    EXPECT_EQ(F.rank(), 3);
    EXPECT_TRUE(F.proportional(tangent_cone(Q, a)));
    Rng srng(n);
    for (const auto& x : sample_conic(C, 5, srng)) EXPECT_LT(relative_residual(to_complex(F), x), 1e-9);
  }
}

TEST(ConeOverConic, ViewpointInPlaneRejected) {
  const QuadricForm G = QuadricForm::from_hompoly(parse_hompoly("x1^2 + x2^2 - x0^2"));
  EXPECT_THROW(cone_over_conic({1, 0, 0, 0}, G, {0, 0, 0, 1}), Error);
}

TEST(QuadricPencil, EveryMemberHasTheContour) {
  Rng rng(kDefaultSeed + 22);
  const QuadricForm Q = random_regular_quadric(rng);
  const Vec4 a = random_point_off(Q, rng);
  const Conic C = conic_contour(Q, a);
  const QuadricPencil pencil = quadric_pencil_from_contour(C, a);
  for (int n = 0; n < 10; ++n) {
    const Scalar lambda = random_scalar(rng), mu = random_scalar(rng);
    const QuadricForm M = pencil.member(lambda, mu);
    if (M.rank() < 4) continue;
    EXPECT_TRUE(proportional(M.polar(a), C.H));
    Rng srng(n);
    for (const auto& x : sample_conic(C, 4, srng)) EXPECT_LT(relative_residual(to_complex(M), x), 1e-9);
  }
  // Q itself is in the pencil: Q(a)·Q = (tangent cone) + (Qa)(Qa)ᵀ, with the cone
  // a nonzero multiple of F.
  const Matrix& Fm = pencil.F.matrix();
  const QuadricForm Ha2 = QuadricForm::square(Q.polar(a));
  Vector lhs, rhs;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      lhs.push_back(Fm[i][j]);
      rhs.push_back(Q.eval(a) * Q(i, j) - Ha2(i, j));
    }
  Matrix col(lhs.size(), Vector(1));
  for (std::size_t k = 0; k < lhs.size(); ++k) col[k][0] = lhs[k];
  EXPECT_TRUE(solve(col, rhs).has_value());
}

TEST(QuadricFromTwoContours, SphereExample) {
  const QuadricForm sphere = QuadricForm::from_hompoly(parse_hompoly("x1^2 + x2^2 + x3^2 - x0^2"));
  const Vec4 a{1, 0, 0, 3}, b{1, 2, 0, 0};
  const QuadricForm R = quadric_from_two_contours({conic_contour(sphere, a), a}, {conic_contour(sphere, b), b});
  EXPECT_TRUE(R.proportional(sphere));
  EXPECT_TRUE(R.is_sphere());
}

TEST(QuadricFromTwoContoursProperty, RoundTripAndSwap) {
  Rng rng(kDefaultSeed + 23);
  for (int n = 0; n < 20; ++n) {
    const QuadricForm Q = random_regular_quadric(rng);
    const Vec4 a = random_point_off(Q, rng), b = random_point_off(Q, rng);
    if (proportional(a, b)) continue;
    const ContourConic ca{conic_contour(Q, a), a}, cb{conic_contour(Q, b), b};
    try {
      const QuadricForm R = quadric_from_two_contours(ca, cb);
      EXPECT_TRUE(R.proportional(Q)) << Q.to_string();
      EXPECT_TRUE(quadric_from_two_contours(cb, ca).proportional(R));
    } catch (const Error& e) {
      // b on the polar plane of a (conjugate viewpoints) makes the
      // pencils meet in a line; anything else is a failure.
      EXPECT_TRUE(Q.bilinear(a, b).is_zero()) << e.what();
    }
  }
}

TEST(QuadricFromTwoContours, DifferentQuadricsAreInconsistent) {
  Rng rng(kDefaultSeed + 24);
  const QuadricForm Q1 = random_regular_quadric(rng), Q2 = random_regular_quadric(rng);
  const Vec4 a = random_point_off(Q1, rng), b = random_point_off(Q2, rng);
  try {
    quadric_from_two_contours({conic_contour(Q1, a), a}, {conic_contour(Q2, b), b});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Inconsistent);
  }
}

TEST(QuadricFromThreeSilhouettesProperty, RoundTrip) {
  Rng rng(kDefaultSeed + 25);
  int done = 0;
  for (int n = 0; n < 10; ++n) {
    const QuadricForm Q = random_regular_quadric(rng);
    std::array<SilhouetteConic, 3> sil;
    for (auto& s : sil) {
      const Vec4 a = random_point_off(Q, rng);
      Plane H = random_point(rng);
      while (dot4(H, a).is_zero()) H = random_point(rng);
      s = {conic_silhouette(Q, a, H), a};
    }
    const ThreeSilhouetteReport rep = quadric_from_three_silhouettes(sil[0], sil[1], sil[2]);
    EXPECT_TRUE(rep.quadric.proportional(Q)) << Q.to_string();
    ++done;
  }
  EXPECT_EQ(done, 10);
}

TEST(QuadricFromThreeSilhouettes, CollinearViewpointsRejected) {
  const QuadricForm sphere = QuadricForm::from_hompoly(parse_hompoly("x1^2 + x2^2 + x3^2 - x0^2"));
  const std::array<Vec4, 3> a{{{1, 0, 0, 3}, {1, 0, 0, 4}, {1, 0, 0, 5}}};
  const Plane H{0, 0, 0, 1};
  EXPECT_THROW(quadric_from_three_silhouettes({conic_silhouette(sphere, a[0], H), a[0]},
                                              {conic_silhouette(sphere, a[1], H), a[1]},
                                              {conic_silhouette(sphere, a[2], H), a[2]}),
               Error);
}

TEST(SilhouetteFamily, AlphaOneGivesTheQuadric) {
  Rng rng(kDefaultSeed + 26);
  const QuadricForm Q = random_regular_quadric(rng);
  const Vec4 a = random_point_off(Q, rng), b = random_point_off(Q, rng);
  EXPECT_LT(form_distance(silhouette_family_member(Q, a, b, 1.0), to_complex(Q)), 1e-9);
}

TEST(SilhouetteFamilyProperty, MembersShareBothSilhouettes) {
  Rng rng(kDefaultSeed + 27);
  for (int n = 0; n < 10; ++n) {
    const QuadricForm Q = random_regular_quadric(rng);
    const Vec4 a = random_point_off(Q, rng), b = random_point_off(Q, rng);
    const ComplexForm Qc = to_complex(Q);
    for (double alpha1 : {0.5, 2.0, -3.0}) {
      const ComplexForm Pm = silhouette_family_member(Q, a, b, alpha1);
      EXPECT_GT(form_distance(Pm, Qc), 1e-3);  // a different quadric
      EXPECT_LT(form_distance(tangent_cone(Pm, a), tangent_cone(Qc, a)), 1e-9);
      EXPECT_LT(form_distance(tangent_cone(Pm, b), tangent_cone(Qc, b)), 1e-9);
    }
  }
}

// ---------------------------------------------------------------- syzygy

const std::vector<HomPoly> kExampleG{parse_hompoly("x0^2 - x1^2 - x2^2 + x3^2"),
                                     parse_hompoly("x1^2 + x2^2 + x3^2 - 2*x0*x1")};
const Vec4 kExampleA{1, -1, 0, -1};

TEST(Syzygy, CubicExampleHasOneSolution) {
  const SyzygyResult r = syzygy_surfaces(kExampleG, kExampleA, 3);
  ASSERT_EQ(r.solutions.size(), 1u);
  EXPECT_EQ(r.spurious_dimension, 0);
  const SyzygySolution& sol = r.solutions[0];
  EXPECT_TRUE(syzygy_residual(kExampleG, kExampleA, sol).is_zero());
  // Oracle (tests/oracles/example1_oracle.py): H ∝ (x0 − 2x1 − x3, −x0 − x1 + x3).
  const HomPoly F = parse_hompoly(
      "x0^3 - x0^2*x3 - 2*x0*x1*x3 - 2*x0*x2^2 + x1^3 + 2*x1^2*x3 + x1*x2^2 - 3*x1*x3^2 + 2*x2^2*x3");
  EXPECT_EQ(sol.F.canonical(), F.canonical());
  EXPECT_TRUE(in_span({sol.H[0]}, parse_hompoly("x0 - 2*x1 - x3")));
  EXPECT_TRUE(in_span({sol.H[1]}, parse_hompoly("-x0 - x1 + x3")));
}

TEST(Syzygy, CubicExampleContourContainsTwoLines) {
  const HomPoly F = syzygy_surfaces(kExampleG, kExampleA, 3).solutions.at(0).F;
  const HomPoly DF = F.directional(kExampleA);
  for (double sign : {1.0, -1.0}) {
    const double r = sign * std::sqrt(7.0 / 5.0);
    for (double s1 : {0.0, 1.0, -2.5}) {
      const std::array<std::complex<double>, 4> x{1.0, s1, r * (1 + s1), 1 + 2 * s1};
      EXPECT_NEAR(std::abs(F.eval(x)), 0, 1e-12);
      EXPECT_NEAR(std::abs(DF.eval(x)), 0, 1e-12);
    }
  }
}

TEST(Syzygy, QuarticSolutionsContainTheSpuriousOnes) {
  const HomPoly F = syzygy_surfaces(kExampleG, kExampleA, 3).solutions.at(0).F;
  const SyzygyResult r = syzygy_surfaces(kExampleG, kExampleA, 4);
  std::vector<HomPoly> basis;
  for (const auto& sol : r.solutions) {
    basis.push_back(sol.F);
    EXPECT_TRUE(syzygy_residual(kExampleG, kExampleA, sol).is_zero());
  }
  for (int j = 0; j < 4; ++j) EXPECT_TRUE(in_span(basis, F * HomPoly::variable(j)));
  EXPECT_TRUE(in_span(basis, kExampleG[0] * kExampleG[1]));
  EXPECT_GE(r.spurious_dimension, 5);
}

TEST(SyzygyProperty, ContourConditionHoldsOnSolutions) {
  // D_a F vanishes on the curve wherever F does: sample the curve numerically.
  Rng rng(kDefaultSeed + 28);
  for (int d = 2; d <= 4; ++d) {
    const SyzygyResult r = syzygy_surfaces(kExampleG, kExampleA, d);
    for (const auto& sol : r.solutions) {
      EXPECT_TRUE(syzygy_residual(kExampleG, kExampleA, sol).is_zero());
      HomPoly sum(d);
      for (std::size_t i = 0; i < kExampleG.size(); ++i) sum += sol.H[i] * kExampleG[i];
      EXPECT_EQ(sum, sol.F);
    }
  }
}

TEST(Syzygy, EmptyResultIsValid) {
  // A plane section of a quadric seen from a generic point: no plane has it as contour.
  const SyzygyResult r = syzygy_surfaces(kExampleG, kExampleA, 1);
  EXPECT_TRUE(r.solutions.empty());
}

// ---------------------------------------------------------------- ruled surfaces

TEST(TwoContours, WorkedExampleIdentityFactor) {
  const RuledSurface R = worked_surface();
  const CurveMap ca = contour(R, kWorkedA).map, cb = contour(R, kWorkedB).map;
  const TwoContourReport rep = ruled_from_two_contours(ca, kWorkedA, cb, kWorkedB);
  const BiPoly uv = BiPoly::u() - BiPoly::v();
  EXPECT_TRUE(bipoly_divides(uv, rep.delta)) << rep.delta.to_string();
  EXPECT_EQ(rep.candidates.at(rep.accepted).psi, MobiusTransform::identity());
  Rng rng(kDefaultSeed + 29);
  EXPECT_TRUE(same_surface(rep.surface(), R, rng));
}

TEST(TwoContoursProperty, RoundTripOnRandomSurfaces) {
  Rng rng(kDefaultSeed + 30);
  for (int n = 0; n < 10; ++n) {
    const RuledSurface R = random_surface_of_degree(rng, 3 + n % 2);
    const Vec4 a = random_point(rng), b = random_point(rng);
    const CurveMap ca = contour(R, a).map, cb = contour(R, b).map;
    const TwoContourReport rep = ruled_from_two_contours(ca, a, cb, b);
    EXPECT_TRUE(same_surface(rep.surface(), R, rng)) << R.to_string();
    // Corresponding parameters: ψ(s) = s since both contours share R's parameter.
    EXPECT_EQ(rep.candidates.at(rep.accepted).psi, MobiusTransform::identity());
  }
}

TEST(TwoContoursProperty, MobiusReparameterizationInvariance) {
  Rng rng(kDefaultSeed + 31);
  for (int n = 0; n < 5; ++n) {
    const RuledSurface R = random_surface_of_degree(rng, 3);
    const Vec4 a = random_point(rng), b = random_point(rng);
    const MobiusTransform phi = random_mobius(rng);
    const CurveMap ca = contour(R, a).map.reparameterize(phi), cb = contour(R, b).map;
    const TwoContourReport rep = ruled_from_two_contours(ca, a, cb, b);
    EXPECT_TRUE(same_surface(rep.surface(), R, rng));
    // ψ maps a parameter of ca to the parameter of cb on the same ruling: ψ = φ.
    EXPECT_EQ(rep.candidates.at(rep.accepted).psi.canonical(), phi.canonical());
  }
}

TEST(TwoContours, UnrelatedCurvesAreInconsistent) {
  Rng rng(kDefaultSeed + 32);
  const RuledSurface R1 = random_surface_of_degree(rng, 3), R2 = random_surface_of_degree(rng, 3);
  const Vec4 a = random_point(rng), b = random_point(rng);
  try {
    ruled_from_two_contours(contour(R1, a).map, a, contour(R2, b).map, b);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Inconsistent);
  }
}

TEST(Lift, WorkedSilhouettesLiftToContours) {
  const RuledSurface R = worked_surface();
  const TwoSilhouetteReport rep = ruled_from_two_silhouettes(worked_s_a(), kWorkedA, worked_s_b(), kWorkedB);
  EXPECT_EQ(rep.c_a, contour(R, kWorkedA).map);
  EXPECT_EQ(rep.c_b, contour(R, kWorkedB).map);
}

TEST(LiftProperty, CompatibleSilhouettesLiftToContours) {
  Rng rng(kDefaultSeed + 33);
  for (int n = 0; n < 10; ++n) {
    const RuledSurface R = random_surface_of_degree(rng, 3);
    const Vec4 a = random_point(rng), b = random_point(rng);
    Plane Ha = random_point(rng), Hb = random_point(rng);
    if (dot4(Ha, a).is_zero() || dot4(Hb, b).is_zero()) continue;
    const ContourCurve Ca = contour(R, a), Cb = contour(R, b);
    const auto [ca, cb] = lift_silhouette_pair(silhouette(Ca, Ha).map, a, silhouette(Cb, Hb).map, b);
    EXPECT_EQ(ca, Ca.map);
    EXPECT_EQ(cb, Cb.map);
  }
}

TEST(TwoSilhouettes, WorkedExampleEndToEnd) {
  const TwoSilhouetteReport rep = ruled_from_two_silhouettes(worked_s_a(), kWorkedA, worked_s_b(), kWorkedB);
  ASSERT_EQ(rep.marks_a.size(), 3u);
  ASSERT_EQ(rep.marks_b.size(), 3u);
  EXPECT_EQ(rep.phi.canonical(), MobiusTransform(Scalar(1), Scalar(-1), Scalar(0), Scalar(1)).canonical());
  // Cycle invariant of the exact pairing matrix.
  ASSERT_EQ(rep.pairing_exact.size(), 3u);
  ASSERT_TRUE(rep.surface.has_value());
  Rng rng(kDefaultSeed + 34);
  EXPECT_TRUE(same_surface(*rep.surface, worked_surface(), rng));
}

TEST(TwoSilhouettes, SwapGivesTheSameSurface) {
  const TwoSilhouetteReport ab = ruled_from_two_silhouettes(worked_s_a(), kWorkedA, worked_s_b(), kWorkedB);
  const TwoSilhouetteReport ba = ruled_from_two_silhouettes(worked_s_b(), kWorkedB, worked_s_a(), kWorkedA);
  ASSERT_TRUE(ab.surface && ba.surface);
  Rng rng(kDefaultSeed + 35);
  EXPECT_TRUE(same_surface(*ab.surface, *ba.surface, rng));
}

TEST(TwoSilhouettesProperty, RandomCubicsRoundTrip) {
  Rng rng(kDefaultSeed + 36);
  int recovered = 0;
  for (int n = 0; n < 5; ++n) {
    const RuledSurface R = random_surface_of_degree(rng, 3);
    const Vec4 a = random_point(rng), b = random_point(rng);
    const Plane Ha{0, 1, 0, 0}, Hb{0, 0, 1, 0};
    if (dot4(Ha, a).is_zero() || dot4(Hb, b).is_zero()) continue;
    const MobiusTransform phi = random_mobius(rng);
    const CurveMap sa = silhouette(contour(R, a), Ha).map;
    const CurveMap sb = silhouette(contour(R, b), Hb).map.reparameterize(phi);
    const TwoSilhouetteReport rep = ruled_from_two_silhouettes(sa, a, sb, b);
    ASSERT_TRUE(rep.surface.has_value());
    EXPECT_TRUE(same_surface(*rep.surface, R, rng)) << R.to_string();
    ++recovered;
  }
  EXPECT_GT(recovered, 0);
}

TEST(SameSurface, DistinguishesSurfaces) {
  Rng rng(kDefaultSeed + 37);
  const RuledSurface R = worked_surface();
  EXPECT_TRUE(same_surface(R, R, rng));
  EXPECT_FALSE(same_surface(R, standard_quadric(), rng));
  EXPECT_FALSE(same_surface(R, complex_cubic(), rng));
}

}  // namespace
}  // namespace rc
