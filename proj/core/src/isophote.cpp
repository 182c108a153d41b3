#include "rcgeom/isophote.hpp"

#include <algorithm>
#include <cmath>

#include "rcgeom/errors.hpp"
#include "rcgeom/roots.hpp"

namespace rc {
namespace {

PolyVec3 cross(const PolyVec3& x, const PolyVec3& y) {
  return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}

UniPoly dot(const PolyVec3& x, const PolyVec3& y) { return x[0] * y[0] + x[1] * y[1] + x[2] * y[2]; }

UniPoly dot(const PolyVec3& x, const Vec3& a) { return x[0] * a[0] + x[1] * a[1] + x[2] * a[2]; }

PolyVec3 derivative(const PolyVec3& x) { return {x[0].derivative(), x[1].derivative(), x[2].derivative()}; }

// c0 + t c1 + t² c2 with t = v.
BiPoly quadratic_in_t(const UniPoly& c0, const UniPoly& c1, const UniPoly& c2) {
  return BiPoly::from_u(c0) + BiPoly::from_u(c1) * BiPoly::v() +
         BiPoly::from_u(c2) * pow(BiPoly::v(), 2);
}

// (x, y) with x f + y g = gcd(f, g), gcd monic.
std::pair<UniPoly, UniPoly> bezout(const UniPoly& f, const UniPoly& g) {
  UniPoly r0 = f, r1 = g, x0 = 1, x1, y0, y1 = 1;
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UniPoly x2 = x0 - q * x1, y2 = y0 - q * y1;
    x0 = std::move(x1);
    x1 = std::move(x2);
    y0 = std::move(y1);
    y1 = std::move(y2);
  }
  const Scalar inv = r0.lead().inverse();
  return {x0 * inv, y0 * inv};
}

int k_of(const RuledSurface& R) { return infinite_rulings_count(R); }

void check_genus_preconditions(const RuledSurface& R) {
  if (is_developable(R)) fail(ErrorKind::Degenerate, "isophote", "developable surface has no isophote genus");
  if (is_sphere_surface(R))
    fail(ErrorKind::Degenerate, "isophote", "sphere: isophotes are reducible (see is_offset_reducible)");
}

}  // namespace

AffineRuledSurface::AffineRuledSurface(PolyVec3 P_, PolyVec3 qbar_) : P(std::move(P_)), qbar(std::move(qbar_)) {
  if (std::all_of(qbar.begin(), qbar.end(), [](const UniPoly& c) { return c.is_zero(); }))
    fail(ErrorKind::InvalidInput, "isophote", "direction field q̄ is identically zero");
}

AffineRuledSurface AffineRuledSurface::from_projective(const RuledSurface& R) {
  const PolyVec4 &p = R.p().components(), &q = R.q().components();
  if (p[0].is_zero() && q[0].is_zero())
    fail(ErrorKind::Degenerate, "isophote", "surface lies in the plane at infinity");
  const UniPoly g = poly_gcd(p[0], q[0]);
  if (g.degree() > 0)
    fail(ErrorKind::Degenerate, "isophote", "a ruling lies at infinity; no polynomial affine chart",
         "gcd(p0, q0) = " + g.to_string());
  const auto [lam, mu] = bezout(p[0], q[0]);
  PolyVec3 P, qb;
  for (int j = 0; j < 3; ++j) {
    P[j] = lam * p[j + 1] + mu * q[j + 1];
    qb[j] = p[0] * q[j + 1] - q[0] * p[j + 1];
  }
  return AffineRuledSurface(P, qb);
}

RuledSurface AffineRuledSurface::to_projective(bool allow_developable) const {
  return RuledSurface(CurveMap({UniPoly(1), P[0], P[1], P[2]}), CurveMap({UniPoly(), qbar[0], qbar[1], qbar[2]}),
                      allow_developable);
}

bool AffineRuledSurface::is_real() const {
  for (int j = 0; j < 3; ++j)
    if (!P[j].is_real() || !qbar[j].is_real()) return false;
  return true;
}

NormalField normal_field(const AffineRuledSurface& R) {
  return {cross(derivative(R.P), R.qbar), cross(derivative(R.qbar), R.qbar)};
}

void IsophoteSpec::validate() const {
  if (std::all_of(direction.begin(), direction.end(), [](const Scalar& c) { return c.is_zero(); }))
    fail(ErrorKind::InvalidInput, "isophote", "direction must be nonzero");
  if (allow_complex) return;
  for (const auto& c : direction)
    if (!c.is_real()) fail(ErrorKind::InvalidInput, "isophote", "complex direction requires allow_complex");
  if (!alpha.is_real()) fail(ErrorKind::InvalidInput, "isophote", "complex alpha requires allow_complex");
  const Rational a2 = alpha.re() * alpha.re();
  if (a2 > 1) fail(ErrorKind::InvalidInput, "isophote", "alpha must satisfy alpha^2 <= 1");
}

BiPoly isophote_curve(const AffineRuledSurface& R, const IsophoteSpec& spec) {
  spec.validate();
  const NormalField n = normal_field(R);
  const Vec3& a = spec.direction;
  const Scalar aa = a[0] * a[0] + a[1] * a[1] + a[2] * a[2];
  const Scalar w = spec.alpha * spec.alpha * aa;
  const UniPoly na1 = dot(n.n1, a), na2 = dot(n.n2, a);
  const UniPoly c0 = na1 * na1 - w * dot(n.n1, n.n1);
  const UniPoly c1 = 2 * (na1 * na2 - w * dot(n.n1, n.n2));
  const UniPoly c2 = na2 * na2 - w * dot(n.n2, n.n2);
  const UniPoly content = poly_gcd(poly_gcd(c0, c1), c2);
  if (content.is_zero())
    fail(ErrorKind::Degenerate, "isophote", "isophote equation vanishes identically (developable input?)");
  return quadratic_in_t(exact_div(c0, content), exact_div(c1, content), exact_div(c2, content)).canonical();
}

UniPoly pn_discriminant(const AffineRuledSurface& R) {
  const NormalField n = normal_field(R);
  const UniPoly b = dot(n.n1, n.n2);
  return b * b - dot(n.n1, n.n1) * dot(n.n2, n.n2);
}

OffsetReport offset_reducibility(const AffineRuledSurface& R) {
  const NormalField n = normal_field(R);
  OffsetReport rep;
  rep.discriminant = pn_discriminant(R);
  for (int j = 0; j < 3; ++j) rep.common_factor = poly_gcd(poly_gcd(rep.common_factor, n.n1[j]), n.n2[j]);
  if (!rep.discriminant.is_zero()) return rep;
  const UniPoly A = dot(n.n1, n.n1), B = dot(n.n1, n.n2), C = dot(n.n2, n.n2);
  // n·n = A + 2Bt + Ct² with B² = AC.
  BiPoly sigma;
  Scalar c;
  if (!C.is_zero()) {
    const auto y = sqrt_up_to_constant(C);
    if (!y) return rep;
    c = C.lead() / (y->lead() * y->lead());
    const auto [x, r] = divmod(B * c.inverse(), *y);  // x = B / (c y)
    if (!r.is_zero()) fail(ErrorKind::Internal, "isophote", "PN square root: inexact division");
    sigma = BiPoly::from_u(x) + BiPoly::from_u(*y) * BiPoly::v();
  } else if (!A.is_zero()) {
    const auto x = sqrt_up_to_constant(A);
    if (!x) return rep;
    c = A.lead() / (x->lead() * x->lead());
    sigma = BiPoly::from_u(*x);
  } else {
    return rep;  // n·n ≡ 0: isotropic normals, no offset
  }
  if (c * (sigma * sigma) != quadratic_in_t(A, 2 * B, C))
    fail(ErrorKind::Internal, "isophote", "PN square root failed verification");
  rep.reducible = true;
  rep.sigma = sigma;
  rep.sigma_scale = c;
  return rep;
}

bool is_offset_reducible(const AffineRuledSurface& R) { return offset_reducibility(R).reducible; }

bool is_offset_reducible(const QuadricForm& Q) { return Q.rank() == 4 && Q.is_sphere(); }

bool is_sphere_surface(const RuledSurface& R) {
  if (R.ruling_degree() != 2) return false;
  try {
    return implicit_quadric(R).is_sphere();
  } catch (const Error&) {
    return false;
  }
}

int isophote_genus(const RuledSurface& R) {
  check_genus_preconditions(R);
  return R.ruling_degree() - k_of(R) - 1;
}

int isophote_genus(const QuadricForm& Q) {
  if (Q.rank() != 4) fail(ErrorKind::Degenerate, "isophote", "quadric is not regular", Q.to_string());
  if (Q.is_sphere()) fail(ErrorKind::Degenerate, "isophote", "sphere: the isophote is reducible");
  // Q ∩ ω is the conic of the lower 3x3 block: regular (k = 0) or two
  // lines, one of which counts as a ruling (k = 1).
  Matrix w(3, Vector(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) w[i][j] = Q(i + 1, j + 1);
  const int k = rank(w) == 3 ? 0 : 1;
  return 2 - k - 1;
}

int ramification_count(const RuledSurface& R) {
  check_genus_preconditions(R);
  return 2 * (R.ruling_degree() - k_of(R));
}

int real_component_bound(const RuledSurface& R) {
  check_genus_preconditions(R);
  return R.ruling_degree() - k_of(R);
}

bool rational_isophote_criterion(const AffineRuledSurface& R) {
  try {
    if (is_sphere_surface(R.to_projective(true))) return true;
  } catch (const Error&) {
  }
  const UniPoly g = poly_gcd(poly_gcd(R.qbar[0], R.qbar[1]), R.qbar[2]);
  return std::all_of(R.qbar.begin(), R.qbar.end(),
                     [&](const UniPoly& c) { return c.is_zero() || exact_div(c, g).degree() <= 1; });
}

TangencyReport tangency_count(const RuledSurface& R, const IsophoteSpec& spec, double merge_tolerance) {
  spec.validate();
  TangencyReport rep;
  rep.merge_tolerance = merge_tolerance;
  rep.expected = ramification_count(R);
  const Vec3& a = spec.direction;
  const Scalar aa = a[0] * a[0] + a[1] * a[1] + a[2] * a[2];
  const Scalar w = spec.alpha * spec.alpha * aa;
  std::array<std::array<Scalar, 3>, 3> A;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) A[i][j] = a[i] * a[j] - (i == j ? w : Scalar(0));
  std::array<std::array<Scalar, 3>, 3> adj;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      adj[i][j] = A[r0][c0] * A[r1][c1] - A[r0][c1] * A[r1][c0];
    }
  const PolyVec4 d = omega_section(R);
  UniPoly f;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) f += d[i + 1] * d[j + 1] * adj[i][j];
  if (f.is_zero())
    fail(ErrorKind::Degenerate, "isophote", "tangency polynomial vanishes: non-generic direction or angle");
  rep.polynomial = f;
  int form_degree = 0;
  for (int j = 1; j < 4; ++j) form_degree = std::max(form_degree, d[j].degree());
  rep.at_infinity = 2 * form_degree - f.degree();
  if (f.degree() > 0)
    for (const auto& root : complex_roots(f)) {
      const std::complex<double> z = root.value;
      const bool merged = std::any_of(rep.roots.begin(), rep.roots.end(), [&](const std::complex<double>& y) {
        return std::abs(y - z) < merge_tolerance;
      });
      if (!merged) rep.roots.push_back(z);
    }
  rep.count = static_cast<int>(rep.roots.size()) + rep.at_infinity;
  return rep;
}

std::vector<std::array<double, 5>> isophote_trace(const AffineRuledSurface& R, const BiPoly& curve, double from,
                                                  double to, int n) {
  if (n < 2) fail(ErrorKind::InvalidInput, "isophote", "trace needs at least two samples");
  const auto c = curve.v_coeffs();
  std::vector<std::array<double, 5>> rows;
  auto ev = [](const UniPoly& f, double s) { return f.eval(std::complex<double>(s, 0)).real(); };
  for (int k = 0; k < n; ++k) {
    const double s = from + (to - from) * k / (n - 1);
    const double c0 = c.size() > 0 ? ev(c[0], s) : 0, c1 = c.size() > 1 ? ev(c[1], s) : 0,
                 c2 = c.size() > 2 ? ev(c[2], s) : 0;
    std::vector<double> ts;
    if (std::abs(c2) > 1e-300) {
      const double disc = c1 * c1 - 4 * c2 * c0;
      if (disc < 0) continue;
      const double r = std::sqrt(disc);
      ts = {(-c1 - r) / (2 * c2), (-c1 + r) / (2 * c2)};
    } else if (std::abs(c1) > 1e-300) {
      ts = {-c0 / c1};
    }
    for (double t : ts) {
      std::array<double, 5> row{s, t, 0, 0, 0};
      for (int j = 0; j < 3; ++j) row[2 + j] = ev(R.P[j], s) + t * ev(R.qbar[j], s);
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace rc
