#include "rcgeom/quadric_reconstruct.hpp"

#include <cmath>

#include "rcgeom/errors.hpp"
#include "rcgeom/linalg.hpp"

namespace rc {
namespace {

// Basis of the plane H (three points spanning {x : H·x = 0}).
std::vector<Vector> plane_basis(const Plane& H) {
  Matrix m{Vector(H.begin(), H.end())};
  return nullspace(m, 4);
}

ApproxPoint combo(const std::complex<double>& x, const ApproxPoint& p, const std::complex<double>& y,
                  const ApproxPoint& q) {
  ApproxPoint r;
  for (int j = 0; j < 4; ++j) r[j] = x * p[j] + y * q[j];
  return r;
}

// The two points where the line through p, q meets the quadric Q.
std::array<ApproxPoint, 2> meet_line(const QuadricForm& Q, const Vec4& p, const Vec4& q) {
  const std::complex<double> A = Q.eval(p).to_complex(), B = Q.bilinear(p, q).to_complex(),
                             C = Q.eval(q).to_complex();
  // A λ² + 2B λ μ + C μ² = 0.
  const ApproxPoint P = to_approx(p), R = to_approx(q);
  if (std::abs(A) < 1e-300) return {R, combo(C, P, -2.0 * B, R)};
  const std::complex<double> disc = std::sqrt(B * B - A * C);
  return {combo(-B + disc, P, A, R), combo(-B - disc, P, A, R)};
}

// Two points spanning the line π1 ∩ π2.
std::array<Vec4, 2> line_points(const Plane& p1, const Plane& p2) {
  Matrix m{Vector(p1.begin(), p1.end()), Vector(p2.begin(), p2.end())};
  const auto ns = nullspace(m, 4);
  if (ns.size() != 2) fail(ErrorKind::Degenerate, "reconstruct", "polar planes coincide: non-generic viewpoints");
  return {Vec4{ns[0][0], ns[0][1], ns[0][2], ns[0][3]}, Vec4{ns[1][0], ns[1][1], ns[1][2], ns[1][3]}};
}

// The plane containing both lines π1∩π2 and π3∩π4.
Plane plane_through_lines(const Plane& p1, const Plane& p2, const Plane& p3, const Plane& p4) {
  Matrix m(4, Vector(4));
  for (int j = 0; j < 4; ++j) {
    m[j][0] = p1[j];
    m[j][1] = p2[j];
    m[j][2] = -p3[j];
    m[j][3] = -p4[j];
  }
  const auto ns = nullspace(m, 4);
  if (ns.size() != 1)
    fail(ErrorKind::Degenerate, "reconstruct", "contour plane not determined: coincident point pairs");
  Plane h;
  for (int j = 0; j < 4; ++j) h[j] = ns[0][0] * p1[j] + ns[0][1] * p2[j];
  if (is_zero(h)) fail(ErrorKind::Degenerate, "reconstruct", "contour plane vanishes");
  return canonical(h);
}

}  // namespace

int restricted_rank(const QuadricForm& G, const Plane& H) {
  const auto basis = plane_basis(H);
  Matrix m(3, Vector(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      m[i][j] = G.bilinear({basis[i][0], basis[i][1], basis[i][2], basis[i][3]},
                           {basis[j][0], basis[j][1], basis[j][2], basis[j][3]});
  return rank(std::move(m));
}

QuadricForm cone_over_conic(const Vec4& a, const QuadricForm& G, const Plane& H) {
  if (is_zero(H)) fail(ErrorKind::InvalidInput, "reconstruct", "zero conic plane");
  const Scalar ha = dot4(H, a);
  if (ha.is_zero()) fail(ErrorKind::Degenerate, "reconstruct", "viewpoint lies in the plane of the conic");
  if (restricted_rank(G, H) != 3) fail(ErrorKind::Degenerate, "reconstruct", "degenerate conic");
  // M_F = Pᵀ M_G P with P = H(a) I − a Hᵀ.
  Matrix P(4, Vector(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) P[i][j] = (i == j ? ha : Scalar(0)) - a[i] * H[j];
  Matrix GP(4, Vector(4, Scalar(0)));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) GP[i][j] += G(i, k) * P[k][j];
  Matrix F(4, Vector(4, Scalar(0)));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) F[i][j] += P[k][i] * GP[k][j];
  return QuadricForm(std::move(F)).canonical();
}

QuadricForm QuadricPencil::member(const Scalar& lambda, const Scalar& mu) const {
  return lambda * F + mu * QuadricForm::square(H);
}

QuadricPencil quadric_pencil_from_contour(const Conic& C, const Vec4& a) {
  return {cone_over_conic(a, C.G, C.H), C.H, a};
}

QuadricForm quadric_from_two_contours(const ContourConic& c1, const ContourConic& c2) {
  const QuadricPencil P1 = quadric_pencil_from_contour(c1.conic, c1.viewpoint);
  const QuadricPencil P2 = quadric_pencil_from_contour(c2.conic, c2.viewpoint);
  const auto f1 = P1.F.upper(), h1 = QuadricForm::square(P1.H).upper();
  const auto f2 = P2.F.upper(), h2 = QuadricForm::square(P2.H).upper();
  Matrix m(10, Vector(4));
  for (int k = 0; k < 10; ++k) m[k] = {f1[k], h1[k], -f2[k], -h2[k]};
  const auto ns = nullspace(m, 4);
  if (ns.empty()) fail(ErrorKind::Inconsistent, "reconstruct", "inconsistent contours");
  if (ns.size() > 1)
    fail(ErrorKind::Degenerate, "reconstruct", "indeterminate: the two contour pencils coincide",
         std::to_string(ns.size()) + "-dimensional common family");
  const QuadricForm Q = P1.member(ns[0][0], ns[0][1]);
  if (ns[0][0].is_zero() || Q.rank() < 4)
    fail(ErrorKind::Degenerate, "reconstruct", "contours share only a degenerate quadric", Q.to_string());
  return Q.canonical();
}

ThreeSilhouetteReport quadric_from_three_silhouettes(const SilhouetteConic& s1, const SilhouetteConic& s2,
                                                     const SilhouetteConic& s3) {
  const Vec4 &a = s1.viewpoint, &b = s2.viewpoint, &c = s3.viewpoint;
  {
    Matrix m{Vector(a.begin(), a.end()), Vector(b.begin(), b.end()), Vector(c.begin(), c.end())};
    if (rank(std::move(m)) < 3) fail(ErrorKind::Degenerate, "reconstruct", "collinear viewpoints");
  }
  const QuadricForm Fa = cone_over_conic(a, s1.conic.G, s1.conic.H);
  const QuadricForm Fb = cone_over_conic(b, s2.conic.G, s2.conic.H);
  const QuadricForm Fc = cone_over_conic(c, s3.conic.G, s3.conic.H);
  // Points of Q whose tangent plane contains both x and y lie on
  // polar_{F_x}(y) ∩ polar_{F_y}(x); that line is the chord C_x ∩ C_y.
  const Plane ab = Fa.polar(b), ba = Fb.polar(a);
  const Plane ac = Fa.polar(c), ca = Fc.polar(a);
  const Plane bc = Fb.polar(c), cb = Fc.polar(b);
  ThreeSilhouetteReport rep;
  rep.contour_planes[0] = plane_through_lines(ab, ba, ac, ca);
  rep.contour_planes[1] = plane_through_lines(ab, ba, bc, cb);
  rep.contour_planes[2] = plane_through_lines(ac, ca, bc, cb);
  const auto lab = line_points(ab, ba), lac = line_points(ac, ca), lbc = line_points(bc, cb);
  rep.point_pairs = {meet_line(Fa, lab[0], lab[1]), meet_line(Fa, lac[0], lac[1]), meet_line(Fb, lbc[0], lbc[1])};
  rep.quadric = quadric_from_two_contours({{Fa, rep.contour_planes[0]}, a}, {{Fb, rep.contour_planes[1]}, b});
  // The third silhouette must be consistent with the result.
  if (!cone_over_conic(c, Fc, rep.contour_planes[2]).proportional(tangent_cone(rep.quadric, c)))
    fail(ErrorKind::Inconsistent, "reconstruct", "third silhouette disagrees with the reconstructed quadric");
  return rep;
}

ComplexForm to_complex(const QuadricForm& Q) {
  ComplexForm m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = Q(i, j).to_complex();
  return m;
}

ComplexForm tangent_cone(const ComplexForm& Q, const Vec4& a) {
  const ApproxPoint x = to_approx(a);
  std::array<std::complex<double>, 4> h{};
  std::complex<double> qa = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) h[i] += Q[i][j] * x[j];
    qa += x[i] * h[i];
  }
  ComplexForm F;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) F[i][j] = qa * Q[i][j] - h[i] * h[j];
  return F;
}

ComplexForm silhouette_family_member(const QuadricForm& Q, const Vec4& a, const Vec4& b, double alpha1) {
  using C = std::complex<double>;
  const ComplexForm M = to_complex(Q);
  auto polar_scaled = [&](const Vec4& x) {
    const ApproxPoint v = to_approx(x);
    std::array<C, 4> h{};
    C qx = 0;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) h[i] += M[i][j] * v[j];
      qx += v[i] * h[i];
    }
    if (std::abs(qx) < 1e-300) fail(ErrorKind::Degenerate, "reconstruct", "viewpoint lies on the quadric");
    const C r = std::sqrt(qx);
    for (auto& c : h) c /= r;
    return h;
  };
  const auto Ha = polar_scaled(a), Hb = polar_scaled(b);
  const C beta1 = std::sqrt(C(alpha1 * alpha1 - 1.0));
  // G_a = Q − H_a²; P = G_a + (α1 H_a + β1 H_b)².
  ComplexForm P;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const C li = alpha1 * Ha[i] + beta1 * Hb[i], lj = alpha1 * Ha[j] + beta1 * Hb[j];
      P[i][j] = M[i][j] - Ha[i] * Ha[j] + li * lj;
    }
  return P;
}

std::vector<ApproxPoint> sample_conic(const Conic& C, int n, Rng& rng) {
  const auto basis = plane_basis(C.H);
  std::array<Vec4, 3> e;
  for (int i = 0; i < 3; ++i) e[i] = {basis[i][0], basis[i][1], basis[i][2], basis[i][3]};
  std::vector<ApproxPoint> out;
  while (static_cast<int>(out.size()) < n) {
    // A random line in the plane meets the conic in two points.
    Vec4 p, q;
    for (int j = 0; j < 4; ++j) {
      p[j] = Scalar(0);
      q[j] = Scalar(0);
    }
    for (int i = 0; i < 3; ++i) {
      const Scalar x(rng.rational(9, 5)), y(rng.rational(9, 5));
      for (int j = 0; j < 4; ++j) {
        p[j] += x * e[i][j];
        q[j] += y * e[i][j];
      }
    }
    if (is_zero(p) || is_zero(q) || proportional(p, q)) continue;
    for (const auto& x : meet_line(C.G, p, q))
      if (static_cast<int>(out.size()) < n) out.push_back(x);
  }
  return out;
}

double relative_residual(const ComplexForm& F, const ApproxPoint& x) {
  double fn = 0, xn = 0;
  std::complex<double> v = 0;
  for (int i = 0; i < 4; ++i) {
    xn += std::norm(x[i]);
    for (int j = 0; j < 4; ++j) {
      fn += std::norm(F[i][j]);
      v += x[i] * F[i][j] * x[j];
    }
  }
  return std::abs(v) / (std::sqrt(fn) * xn);
}

}  // namespace rc
