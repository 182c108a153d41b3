#include "rcgeom/contour.hpp"

#include <cmath>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "rcgeom/errors.hpp"
#include "rcgeom/plucker.hpp"

namespace rc {
namespace {

PolyVec4 constant(const Vec4& a) { return {UniPoly(a[0]), UniPoly(a[1]), UniPoly(a[2]), UniPoly(a[3])}; }

UniPoly base_gcd(const RuledSurface& R) {
  UniPoly g;
  for (const auto& c : R.plucker()) g = poly_gcd(g, c);
  return g;
}

}  // namespace

PolyVec4 contour_formula(const RuledSurface& R, const Vec4& a) {
  const PolyVec4 A = constant(a);
  const PolyVec4& p = R.p().components();
  const PolyVec4& q = R.q().components();
  const UniPoly dq = det4(A, p, q, R.q().derivative());
  const UniPoly dp = det4(A, p, q, R.p().derivative());
  PolyVec4 c;
  for (int j = 0; j < 4; ++j) c[j] = dq * p[j] - dp * q[j];
  return c;
}

ContourCurve contour(const RuledSurface& R, const Vec4& a) {
  if (is_zero(a)) fail(ErrorKind::InvalidInput, "contour", "zero viewpoint");
  const PolyVec4 c = contour_formula(R, a);
  bool all_zero = true;
  for (const auto& x : c) all_zero = all_zero && x.is_zero();
  if (all_zero) {
    const UniPoly dp = det4(constant(a), R.p().components(), R.q().components(), R.p().derivative());
    const UniPoly dq = det4(constant(a), R.p().components(), R.q().components(), R.q().derivative());
    fail(ErrorKind::Degenerate, "contour", "contour map vanishes identically for this viewpoint",
         "det[a,p,q,p'] = " + dp.to_string() + "; det[a,p,q,q'] = " + dq.to_string());
  }
  return {CurveMap(c), a};
}

PolyVec4 project_from(const Vec4& a, const PolyVec4& x, const Plane& H) {
  const UniPoly hx = dot(H, x);
  Scalar ha(0);
  for (int j = 0; j < 4; ++j) ha += H[j] * a[j];
  PolyVec4 y;
  for (int j = 0; j < 4; ++j) y[j] = hx * a[j] - x[j] * ha;
  return y;
}

SilhouetteCurve silhouette(const ContourCurve& C, const Plane& screen) {
  if (is_zero(screen)) fail(ErrorKind::InvalidInput, "contour", "zero screen plane");
  if (dot4(screen, C.viewpoint).is_zero())
    fail(ErrorKind::InvalidInput, "contour", "screen contains the viewpoint");
  const PolyVec4 y = project_from(C.viewpoint, C.map.components(), screen);
  bool all_zero = true;
  for (const auto& x : y) all_zero = all_zero && x.is_zero();
  if (all_zero) fail(ErrorKind::Degenerate, "contour", "contour collapses onto the viewpoint");
  return {CurveMap(y), C.viewpoint, screen};
}

int MarkSet::regular_count() const {
  int n = at_infinity;
  for (const auto& r : regular_roots) n += r.multiplicity;
  return n;
}

UniPoly reduced_torsal_polynomial(const RuledSurface& R) {
  const UniPoly g = base_gcd(R);
  return exact_div(torsal_polynomial(R), g * g);
}

MarkSet contour_mark_parameters(const RuledSurface& R, const Vec4& a, const Vec4& b) {
  if (proportional(a, b)) fail(ErrorKind::InvalidInput, "contour", "viewpoints coincide");
  const PolyVec4 A = constant(a), B = constant(b);
  const PolyVec4& p = R.p().components();
  const PolyVec4& q = R.q().components();
  const PolyVec4 dp = R.p().derivative(), dq = R.q().derivative();
  MarkSet m;
  m.determinant = det4(A, p, q, dp) * det4(B, p, q, dq) - det4(A, p, q, dq) * det4(B, p, q, dp);
  if (m.determinant.is_zero())
    fail(ErrorKind::Degenerate, "contour", "mark determinant vanishes identically: non-generic viewpoints");
  const auto ab = wedge(a, b);
  const auto& l = R.reduced_plucker();
  for (int k = 0; k < 6; ++k) m.regular += l[k] * ab[(k + 3) % 6];
  if (m.regular.is_zero())
    fail(ErrorKind::Degenerate, "contour", "the line ab meets every ruling: non-generic viewpoints");
  if (!divides(m.regular, m.determinant))
    fail(ErrorKind::Internal, "contour", "regular mark factor does not divide the mark determinant");
  m.torsal = reduced_torsal_polynomial(R);
  if (m.regular.degree() > 0) m.regular_roots = roots(m.regular);
  m.at_infinity = R.ruling_degree() - m.regular.degree();
  if (m.torsal.degree() > 0) m.torsal_roots = roots(m.torsal);
  return m;
}

CuspReport torsal_cusps(const RuledSurface& R) {
  CuspReport rep;
  const UniPoly T = reduced_torsal_polynomial(R);
  if (T.degree() < 1) return rep;
  const UniPoly g = base_gcd(R);
  // Rows of the 4x4 matrix with columns p, ṗ, q, q̇; the kernel is the
  // generalized cross product of any three rows.
  const PolyVec4 &p = R.p().components(), &q = R.q().components();
  const PolyVec4 dp = R.p().derivative(), dq = R.q().derivative();
  std::array<PolyVec4, 4> rows;
  for (int i = 0; i < 4; ++i) rows[i] = {p[i], dp[i], q[i], dq[i]};
  std::array<PolyVec4, 4> kernels;
  for (int omit = 0; omit < 4; ++omit) {
    int r[3], n = 0;
    for (int i = 0; i < 4; ++i)
      if (i != omit) r[n++] = i;
    kernels[omit] = join3(rows[r[0]], rows[r[1]], rows[r[2]]);
  }
  for (const auto& root : roots(T)) {
    TorsalCusp cusp{root, std::nullopt, {}};
    if (root.exact) {
      const Scalar& s0 = *root.exact;
      if (g.degree() > 0 && g.eval(s0).is_zero()) {
        rep.warnings.push_back("base-point ruling at s = " + to_string(s0) + " skipped");
        continue;
      }
      if (classify_ruling(R, s0) == RulingClass::Singular) {
        rep.warnings.push_back("singular ruling at s = " + to_string(s0) + " skipped");
        continue;
      }
      Vec4 lam{0, 0, 0, 0};
      for (const auto& k : kernels) {
        lam = eval(k, s0);
        if (!is_zero(lam)) break;
      }
      const Vec4 P = R.p().eval(s0), Q = R.q().eval(s0);
      Vec4 x;
      for (int j = 0; j < 4; ++j) x[j] = lam[1] * P[j] + lam[3] * Q[j];
      if (is_zero(x)) {
        rep.warnings.push_back("torsal ruling at s = " + to_string(s0) + " has no isolated cusp");
        continue;
      }
      cusp.exact = canonical(x);
      cusp.approx = to_approx(*cusp.exact);
    } else {
      const auto z = root.approx.value;
      std::array<std::complex<double>, 4> lam{};
      double best = -1;
      for (const auto& k : kernels) {
        std::array<std::complex<double>, 4> v{k[0].eval(z), k[1].eval(z), k[2].eval(z), k[3].eval(z)};
        double nrm = 0;
        for (auto& c : v) nrm += std::norm(c);
        if (nrm > best) {
          best = nrm;
          lam = v;
        }
      }
      const ApproxPoint P = R.p().eval(z), Q = R.q().eval(z);
      for (int j = 0; j < 4; ++j) cusp.approx[j] = lam[1] * P[j] + lam[3] * Q[j];
      double nrm = 0;
      for (auto& c : cusp.approx) nrm += std::norm(c);
      if (!(nrm > 1e-20)) {
        rep.warnings.push_back("singular ruling near s = " + std::to_string(z.real()) + " skipped");
        continue;
      }
    }
    rep.cusps.push_back(std::move(cusp));
  }
  return rep;
}

Conic conic_contour(const QuadricForm& Q, const Vec4& a) {
  const Plane H = Q.polar(a);
  if (is_zero(H)) fail(ErrorKind::Degenerate, "contour", "viewpoint is a singular point of the quadric");
  return {Q, H};
}

QuadricForm tangent_cone(const QuadricForm& Q, const Vec4& a) {
  const Plane h = Q.polar(a);
  QuadricForm F = Q.eval(a) * Q;
  F += Scalar(-1) * QuadricForm::square(h);
  if (F.is_zero()) fail(ErrorKind::Degenerate, "contour", "tangent cone vanishes: viewpoint on the quadric");
  return F;
}

Conic conic_silhouette(const QuadricForm& Q, const Vec4& a, const Plane& screen) {
  if (dot4(screen, a).is_zero()) fail(ErrorKind::InvalidInput, "contour", "screen contains the viewpoint");
  return {tangent_cone(Q, a), screen};
}

std::vector<std::array<double, 4>> sample_curve(const CurveMap& c, double from, double to, int n) {
  if (n < 1) fail(ErrorKind::InvalidInput, "contour", "sample count must be positive");
  if (!(from <= to)) fail(ErrorKind::InvalidInput, "contour", "empty sample interval");
  std::vector<std::array<double, 4>> rows;
  rows.reserve(n);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (int k = 0; k < n; ++k) {
    const double s = n == 1 ? from : from + (to - from) * k / (n - 1);
    const ApproxPoint x = c.eval(std::complex<double>(s, 0));
    const double w = x[0].real();
    if (w == 0)
      rows.push_back({s, nan, nan, nan});
    else
      rows.push_back({s, x[1].real() / w, x[2].real() / w, x[3].real() / w});
  }
  return rows;
}

void write_samples_csv(std::ostream& os, const std::vector<std::array<double, 4>>& rows) {
  os << "s,x,y,z\n";
  os << std::setprecision(17);
  for (const auto& r : rows) os << r[0] << ',' << r[1] << ',' << r[2] << ',' << r[3] << '\n';
}

std::vector<std::array<double, 4>> read_samples_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "s,x,y,z")
    fail(ErrorKind::InvalidInput, "contour", "missing CSV header s,x,y,z");
  std::vector<std::array<double, 4>> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::array<double, 4> r;
    std::stringstream ss(line);
    std::string cell;
    for (int k = 0; k < 4; ++k) {
      if (!std::getline(ss, cell, ',')) fail(ErrorKind::InvalidInput, "contour", "short CSV row", line);
      try {
        std::size_t used = 0;
        r[k] = std::stod(cell, &used);
        if (used != cell.size()) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        fail(ErrorKind::InvalidInput, "contour", "malformed CSV number", cell);
      }
    }
    rows.push_back(r);
  }
  return rows;
}

}  // namespace rc
