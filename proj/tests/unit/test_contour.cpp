#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "rcgeom/contour.hpp"
#include "rcgeom/linalg.hpp"
#include "rcgeom/roots.hpp"
#include "test_support.hpp"

namespace rc {
namespace {

using namespace rc::testing;

const Plane kScreenX1{0, 1, 0, 0};

TEST(Contour, QuadricContourIsConic) {
  Rng rng(kDefaultSeed);
  for (int n = 0; n < 5; ++n) EXPECT_EQ(contour(standard_quadric(), random_point(rng)).map.degree(), 2);
}

TEST(Contour, WorkedExampleProjectsToPrintedSilhouette) {
  const ContourCurve C = contour(worked_surface(), kWorkedA);
  EXPECT_EQ(silhouette(C, kScreenX1).map, worked_s_a());
}

TEST(ContourProperty, TangentPlaneAtContourPointContainsViewpoint) {
  Rng rng(kDefaultSeed + 1);
  for (int n = 0; n < 50; ++n) {
    const RuledSurface R = random_surface_of_degree(rng, 2 + n % 3);
    const Vec4 a = random_point(rng);
    const ContourCurve C = contour(R, a);
    const Scalar sv = random_scalar(rng);
    const PolyVec4 &p = R.p().components(), &qq = R.q().components();
    const PolyVec4 dp = R.p().derivative(), dq = R.q().derivative();
    const Scalar t0 = det4(a, eval(p, sv), eval(qq, sv), eval(dq, sv));
    const Scalar t1 = -det4(a, eval(p, sv), eval(qq, sv), eval(dp, sv));
    const Vec4 x = R.point(sv, t0, t1);
    if (is_zero(x)) continue;
    EXPECT_TRUE(proportional(x, C.map.eval(sv)));
    EXPECT_TRUE(dot4(tangent_plane(R, sv, t0, t1), a).is_zero());
  }
}

TEST(ContourProperty, DegreeBound) {
  Rng rng(kDefaultSeed + 2);
  for (int n = 0; n < 20; ++n) {
    const RuledSurface R = random_surface_of_degree(rng, 2 + n % 3);
    const int deg = surface_degree(R, rng);
    const ContourCurve C = contour(R, random_point(rng));
    EXPECT_EQ(C.map.degree(), 2 * deg - 2) << R.to_string();
  }
}

TEST(ContourProperty, ViewpointOnSurfaceContainsItsRuling) {
  Rng rng(kDefaultSeed + 3);
  for (int n = 0; n < 10; ++n) {
    const RuledSurface R = random_surface_of_degree(rng, 3);
    const Scalar s_star = random_scalar(rng);
    const Vec4 a = R.point(s_star, random_scalar(rng), random_scalar(rng));
    if (is_zero(a)) continue;
    // The formula picks up the ruling factor (s − s*).
    const PolyVec4 f = contour_formula(R, a);
    UniPoly g;
    for (const auto& c : f) g = poly_gcd(g, c);
    EXPECT_TRUE(divides(s - s_star, g));
    // Every point of the ruling through a has a tangent plane containing a.
    for (int k = 0; k < 20; ++k) {
      const Scalar t0 = random_scalar(rng), t1 = random_scalar(rng);
      try {
        EXPECT_TRUE(dot4(tangent_plane(R, s_star, t0, t1), a).is_zero());
      } catch (const Error&) {
        // r(s*, t) is the singular point of the ruling for this t.
      }
    }
  }
}

TEST(Contour, DegenerateViewpointCarriesDetail) {
  // Along a cone's vertex every tangent plane contains the vertex.
  const RuledSurface R(CurveMap({P({1}), P({}), P({}), P({})}), CurveMap({P({}), P({1}), P({0, 1}), P({0, 0, 1})}),
                       true);
  try {
    contour(R, Vec4{1, 0, 0, 0});
    FAIL() << "expected a typed error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Degenerate);
    EXPECT_FALSE(e.detail().empty());
  }
}

TEST(Silhouette, PlanarContourIsFixed) {
  // The contour of a quadric lies in the polar plane of the viewpoint.
  const RuledSurface R = standard_quadric();
  const QuadricForm Q = implicit_quadric(R);
  const Vec4 a{1, 2, 3, 4};
  const ContourCurve C = contour(R, a);
  ASSERT_TRUE(C.map.lies_in(Q.polar(a)));
  EXPECT_EQ(silhouette(C, Q.polar(a)).map, C.map);
}

TEST(SilhouetteProperty, LiesOnScreenAndOnViewLines) {
  Rng rng(kDefaultSeed + 4);
  for (int n = 0; n < 20; ++n) {
    const RuledSurface R = random_surface_of_degree(rng, 3);
    const Vec4 a = random_point(rng);
    const Plane H = random_point(rng);
    if (dot4(H, a).is_zero()) continue;
    const ContourCurve C = contour(R, a);
    const SilhouetteCurve S = silhouette(C, H);
    EXPECT_TRUE(S.map.lies_in(H));
    const Scalar sv = random_scalar(rng);
    // a, C(s), S(s) collinear: all 3x3 minors vanish.
    const Vec4 c = C.map.eval(sv), x = S.map.eval(sv);
    EXPECT_LE(rank(Matrix{Vector(a.begin(), a.end()), Vector(c.begin(), c.end()), Vector(x.begin(), x.end())}), 2);
  }
}

TEST(Silhouette, ScreenThroughViewpointRejected) {
  const ContourCurve C = contour(worked_surface(), kWorkedA);
  EXPECT_THROW(silhouette(C, Plane{2, -1, 0, 0}), Error);  // 2·1 − 2 = 0
}

TEST(Marks, QuadricHasTwo) {
  Rng rng(kDefaultSeed + 5);
  for (int n = 0; n < 5; ++n) {
    const MarkSet m = contour_mark_parameters(standard_quadric(), random_point(rng), random_point(rng));
    EXPECT_EQ(m.regular_count(), 2);
  }
}

TEST(Marks, WorkedExampleProjectsToPrintedP) {
  const RuledSurface R = worked_surface();
  const MarkSet m = contour_mark_parameters(R, kWorkedA, kWorkedB);
  ASSERT_EQ(m.regular_count(), 3);
  ASSERT_EQ(m.at_infinity, 0);
  const Scalar i = Scalar::i();
  const std::vector<Vec4> printed{{1, 0, 2 + i, 3 - i}, {1, 0, 2 - i, 3 + i}, {0, 0, 0, 1}};
  const CurveMap sa = silhouette(contour(R, kWorkedA), kScreenX1).map;
  std::set<std::string> got, want;
  for (const auto& r : m.regular_roots) {
    ASSERT_TRUE(r.exact.has_value());
    got.insert(format_point(canonical(sa.eval(*r.exact))));
  }
  for (const auto& x : printed) want.insert(format_point(canonical(x)));
  EXPECT_EQ(got, want);
  // The torsal ruling s = 1 is split off.
  EXPECT_EQ(m.torsal.monic(), s - 1);
}

TEST(MarksProperty, RandomCubicsHaveThreeRegularMarks) {
  Rng rng(kDefaultSeed + 6);
  for (int n = 0; n < 20; ++n) {
    const RuledSurface R = random_surface_of_degree(rng, 3);
    const Vec4 a = random_point(rng), b = random_point(rng);
    EXPECT_EQ(contour_mark_parameters(R, a, b).regular_count(), 3);
  }
}

TEST(MarksProperty, SymmetricInViewpoints) {
  Rng rng(kDefaultSeed + 7);
  for (int n = 0; n < 10; ++n) {
    const RuledSurface R = random_surface_of_degree(rng, 2 + n % 3);
    const Vec4 a = random_point(rng), b = random_point(rng);
    const MarkSet ab = contour_mark_parameters(R, a, b), ba = contour_mark_parameters(R, b, a);
    EXPECT_EQ(ab.regular.monic(), ba.regular.monic());
    EXPECT_EQ(ab.at_infinity, ba.at_infinity);
  }
}

TEST(MarksProperty, MarksLieOnBothContours) {
  Rng rng(kDefaultSeed + 8);
  for (int n = 0; n < 10; ++n) {
    const RuledSurface R = random_surface_of_degree(rng, 3);
    const Vec4 a = random_point(rng), b = random_point(rng);
    const MarkSet m = contour_mark_parameters(R, a, b);
    const CurveMap ca = contour(R, a).map, cb = contour(R, b).map;
    for (const auto& r : m.regular_roots)
      EXPECT_LT(projective_distance(ca.eval(r.approx.value), cb.eval(r.approx.value)), 1e-8);
  }
}

TEST(TorsalCusps, NoneOnQuadric) { EXPECT_TRUE(torsal_cusps(standard_quadric()).cusps.empty()); }

TEST(TorsalCusps, WorkedCubicCuspOnEveryContour) {
  const RuledSurface R = worked_surface();
  const CuspReport rep = torsal_cusps(R);
  ASSERT_EQ(rep.cusps.size(), 1u);
  const TorsalCusp& c = rep.cusps[0];
  ASSERT_TRUE(c.exact.has_value());
  ASSERT_EQ(*c.parameter.exact, Scalar(1));
  Rng rng(kDefaultSeed + 9);
  for (int k = 0; k < 5; ++k) {
    const Vec4 a = random_point(rng);
    EXPECT_TRUE(proportional(contour(R, a).map.eval(Scalar(1)), *c.exact));
  }
}

TEST(TorsalCusps, SectionsThroughCuspShareTheRulingDirection) {
  const RuledSurface R = worked_surface();
  const TorsalCusp c = torsal_cusps(R).cusps.at(0);
  const Scalar s0(1);
  const Vec4 p0 = R.p().eval(s0), q0 = R.q().eval(s0);
  // Cusp = λ2 p(s0) + λ4 q(s0).
  const auto lam = solve(Matrix{{p0[0], q0[0]}, {p0[1], q0[1]}, {p0[2], q0[2]}, {p0[3], q0[3]}},
                         Vector(c.exact->begin(), c.exact->end()));
  ASSERT_TRUE(lam.has_value());
  Rng rng(kDefaultSeed + 10);
  for (int k = 0; k < 3; ++k) {
    // σ(s) = α(s) p(s) + β(s) q(s) with (α, β)(s0) = (λ2, λ4).
    const UniPoly alpha = UniPoly((*lam)[0]) + random_scalar(rng) * (s - 1);
    const UniPoly beta = UniPoly((*lam)[1]) + random_scalar(rng) * (s - 1);
    PolyVec4 sigma;
    for (int j = 0; j < 4; ++j) sigma[j] = alpha * R.p()[j] + beta * R.q()[j];
    const Vec4 d = eval(derivative(sigma), s0);
    EXPECT_EQ(rank(Matrix{Vector(p0.begin(), p0.end()), Vector(q0.begin(), q0.end()), Vector(d.begin(), d.end())}), 2);
  }
}

TEST(TorsalCuspsProperty, RandomSurfacesCuspsOnContours) {
  Rng rng(kDefaultSeed + 11);
  int seen = 0;
  for (int n = 0; n < 5; ++n) {
    const RuledSurface R = random_surface_of_degree(rng, 3);
    const CuspReport rep = torsal_cusps(R);
    for (const auto& c : rep.cusps) {
      ++seen;
      for (int k = 0; k < 5; ++k)
        EXPECT_LT(projective_distance(contour(R, random_point(rng)).map.eval(c.parameter.approx.value), c.approx),
                  1e-8);
    }
  }
  EXPECT_GT(seen, 0);
}

TEST(Sample, CsvRoundTrip) {
  const CurveMap c = worked_s_a();
  const auto rows = sample_curve(c, -3, 3, 100);
  ASSERT_EQ(rows.size(), 100u);
  std::stringstream ss;
  write_samples_csv(ss, rows);
  const auto back = read_samples_csv(ss);
  ASSERT_EQ(back.size(), rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k)
    for (int j = 0; j < 4; ++j) {
      if (std::isnan(rows[k][j])) {
        EXPECT_TRUE(std::isnan(back[k][j]));
      } else {
        EXPECT_EQ(back[k][j], rows[k][j]);
      }
    }
  // Re-reading reproduces the evaluations.
  const auto x = c.eval(std::complex<double>(rows[10][0], 0));
  EXPECT_NEAR(rows[10][1], (x[1] / x[0]).real(), 1e-12);
}

TEST(Sample, RejectsMalformedCsv) {
  std::stringstream bad("s,x,y,z\n1,2,three,4\n");
  EXPECT_THROW(read_samples_csv(bad), Error);
  std::stringstream short_row("s,x,y,z\n1,2,3\n");
  EXPECT_THROW(read_samples_csv(short_row), Error);
}

TEST(ConicContour, SphereContourAndCone) {
  const QuadricForm sphere = QuadricForm::from_hompoly(parse_hompoly("x1^2 + x2^2 + x3^2 - x0^2"));
  const Vec4 a{1, 0, 0, 3};
  const Conic C = conic_contour(sphere, a);
  EXPECT_TRUE(proportional(C.H, Vec4{-1, 0, 0, 3}));
  const QuadricForm T = tangent_cone(sphere, a);
  EXPECT_TRUE(T.eval(a).is_zero());
  EXPECT_TRUE(is_zero(T.polar(a)));
  // Contour point (1 : √8/3 ..) avoided: use the rational point (3 : 0 : 2√2 ..) — instead
  // check a rational contour point x with H·x = 0, Q(x) = 0: x = (3 : 0 : ... ) none; use
  // the parameterized circle x = (3(1+u²) : 2√2 ...) numerically.
  Rng rng(kDefaultSeed);
  for (int k = 0; k < 5; ++k) {
    ApproxPoint x{};
    const double u = rng.unit() * 4 - 2, r = std::sqrt(8.0) / 3.0;
    x[0] = 1;
    x[1] = r * (1 - u * u) / (1 + u * u);
    x[2] = r * 2 * u / (1 + u * u);
    x[3] = 1.0 / 3.0;
    EXPECT_NEAR(std::abs(sphere.eval(x)), 0, 1e-12);
    EXPECT_NEAR(std::abs(T.eval(x)), 0, 1e-12);
  }
}

}  // namespace
}  // namespace rc
