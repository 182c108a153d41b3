#include "rcgeom/ruled_surface.hpp"

#include <algorithm>

#include "rcgeom/errors.hpp"
#include "rcgeom/plucker.hpp"
#include "rcgeom/roots.hpp"

namespace rc {

std::string_view to_string(RulingClass c) {
  switch (c) {
    case RulingClass::Regular:
      return "regular";
    case RulingClass::Torsal:
      return "torsal";
    case RulingClass::Singular:
      return "singular";
  }
  return "unknown";
}

RuledSurface::RuledSurface(CurveMap p, CurveMap q, bool allow_developable) : p_(std::move(p)), q_(std::move(q)) {
  l_ = wedge(p_.components(), q_.components());
  UniPoly g;
  for (const auto& c : l_) g = poly_gcd(g, c);
  if (g.is_zero()) fail(ErrorKind::InvalidInput, "surface", "directrices are proportional: no family of lines");
  for (int k = 0; k < 6; ++k) {
    lr_[k] = exact_div(l_[k], g);
    n_ = std::max(n_, lr_[k].degree());
  }
  if (!allow_developable && is_developable(*this))
    fail(ErrorKind::Degenerate, "surface", "developable surface", torsal_polynomial(*this).to_string());
}

Vec4 RuledSurface::point(const Scalar& s, const Scalar& t0, const Scalar& t1) const {
  const Vec4 a = p_.eval(s), b = q_.eval(s);
  return {t0 * a[0] + t1 * b[0], t0 * a[1] + t1 * b[1], t0 * a[2] + t1 * b[2], t0 * a[3] + t1 * b[3]};
}

std::string RuledSurface::to_string() const { return "t0 " + p_.to_string() + " + t1 " + q_.to_string(); }

Plane tangent_plane(const RuledSurface& R, const Scalar& s, const Scalar& t0, const Scalar& t1) {
  if (t0.is_zero() && t1.is_zero()) fail(ErrorKind::InvalidInput, "surface", "(t0, t1) = (0, 0)");
  const Vec4 p = R.p().eval(s), q = R.q().eval(s);
  const Vec4 dp = eval(R.p().derivative(), s), dq = eval(R.q().derivative(), s);
  Vec4 w;
  for (int j = 0; j < 4; ++j) w[j] = t0 * dp[j] + t1 * dq[j];
  const Plane u = join3(p, q, w);
  if (is_zero(u)) fail(ErrorKind::Degenerate, "surface", "tangent plane vanishes: singular point or ruling");
  return u;
}

RulingClass classify_ruling(const RuledSurface& R, const Scalar& s) {
  const Vec4 p = R.p().eval(s), q = R.q().eval(s);
  if (is_zero(p) || is_zero(q) || proportional(p, q))
    fail(ErrorKind::Degenerate, "surface", "base-point ruling: p(s) and q(s) coincide", to_string(s));
  const Vec4 dp = eval(R.p().derivative(), s), dq = eval(R.q().derivative(), s);
  Matrix m{Vector(p.begin(), p.end()), Vector(dp.begin(), dp.end()), Vector(q.begin(), q.end()),
           Vector(dq.begin(), dq.end())};
  switch (rank(std::move(m))) {
    case 4:
      return RulingClass::Regular;
    case 3:
      return RulingClass::Torsal;
    default:
      return RulingClass::Singular;
  }
}

UniPoly torsal_polynomial(const RuledSurface& R) {
  return det4(std::array<PolyVec4, 4>{R.p().components(), R.p().derivative(), R.q().components(),
                                      R.q().derivative()});
}

bool is_developable(const RuledSurface& R) { return torsal_polynomial(R).is_zero(); }

int surface_degree(const RuledSurface& R, Rng& rng) {
  const auto& l = R.reduced_plucker();
  for (int attempt = 0; attempt < 5; ++attempt) {
    Vec4 x, y;
    for (int j = 0; j < 4; ++j) {
      x[j] = Scalar(rng.rational(20, 7));
      y[j] = Scalar(rng.rational(20, 7));
    }
    const auto L = wedge(x, y);
    UniPoly h;
    for (int k = 0; k < 6; ++k) {
      const int dual = (k + 3) % 6;  // pairing partner index
      h += l[k] * L[dual];
    }
    if (h.is_zero()) continue;  // the random line lies on R
    // Intersections on the projective line: finite roots plus the
    // multiplicity of s = ∞ (the drop below the homogeneous degree).
    const int finite = h.degree() > 0 ? static_cast<int>(complex_roots(h).size()) : 0;
    return finite + (R.ruling_degree() - h.degree());
  }
  fail(ErrorKind::Degenerate, "surface", "random lines kept lying on the surface");
}

int infinite_rulings_count(const RuledSurface& R) {
  const auto& l = R.reduced_plucker();
  UniPoly g = poly_gcd(poly_gcd(l[0], l[1]), l[2]);
  if (g.is_zero()) return R.ruling_degree();  // every ruling lies at infinity
  int top = std::max({l[0].degree(), l[1].degree(), l[2].degree()});
  return g.degree() + (R.ruling_degree() - top);
}

PolyVec4 omega_section(const RuledSurface& R) {
  const auto& l = R.reduced_plucker();
  const UniPoly g = poly_gcd(poly_gcd(l[0], l[1]), l[2]);
  if (g.is_zero()) fail(ErrorKind::Degenerate, "surface", "surface lies in the plane at infinity");
  return {UniPoly(), exact_div(l[0], g), exact_div(l[1], g), exact_div(l[2], g)};
}

bool contains(const RuledSurface& R, const Vec4& x) {
  // x is on the ruling at s iff rank [p(s); q(s); x] < 3, i.e. the four
  // 3x3 minors (linear in ℓ) share the root s.
  const auto& l = R.plucker();
  UniPoly g;
  for (const auto& c : l) g = poly_gcd(g, c);
  PolyVec4 xp;
  for (int j = 0; j < 4; ++j) xp[j] = UniPoly(x[j]);
  const PolyVec4 m = join3(R.p().components(), R.q().components(), xp);
  UniPoly common;
  int top = -1;
  bool all_zero = true;
  for (const auto& c : m) {
    const UniPoly r = exact_div(c, g);
    if (r.is_zero()) continue;
    all_zero = false;
    common = poly_gcd(common, r);
    top = std::max(top, r.degree());
  }
  if (all_zero) return true;
  return common.degree() >= 1 || top < R.ruling_degree();
}

QuadricForm implicit_quadric(const RuledSurface& R) {
  const PolyVec4& p = R.p().components();
  const PolyVec4& q = R.q().components();
  int deg = 0;
  for (int j = 0; j < 4; ++j) deg = std::max({deg, p[j].degree(), q[j].degree()});
  // Unknowns e_ij (i <= j); the form is Σ e_ii x_i² + 2 Σ_{i<j} e_ij x_i x_j.
  std::vector<std::array<int, 2>> idx;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) idx.push_back({i, j});
  Matrix rows;
  auto add_identity = [&](const PolyVec4& x, const PolyVec4& y) {
    std::vector<UniPoly> cols;
    for (const auto& [i, j] : idx) cols.push_back(i == j ? x[i] * y[i] : x[i] * y[j] + x[j] * y[i]);
    for (int k = 0; k <= 2 * deg; ++k) {
      Vector row;
      bool any = false;
      for (const auto& c : cols) {
        row.push_back(c.coeff(k));
        any = any || !row.back().is_zero();
      }
      if (any) rows.push_back(std::move(row));
    }
  };
  add_identity(p, p);
  add_identity(p, q);
  add_identity(q, q);
  const auto ns = nullspace(rows, 10);
  if (ns.size() != 1) fail(ErrorKind::Degenerate, "surface", "surface does not lie on a unique quadric");
  std::array<Scalar, 10> e;
  std::copy(ns[0].begin(), ns[0].end(), e.begin());
  return QuadricForm::from_upper(e).canonical();
}

RuledSurface standard_quadric() {
  const UniPoly s = UniPoly::x();
  return RuledSurface(CurveMap({UniPoly(1), s, UniPoly(), UniPoly()}), CurveMap({UniPoly(), UniPoly(), UniPoly(1), s}));
}

}  // namespace rc
