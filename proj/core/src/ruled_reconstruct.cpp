#include "rcgeom/ruled_reconstruct.hpp"

#include <algorithm>
#include <cmath>

#include "rcgeom/contour.hpp"
#include "rcgeom/errors.hpp"
#include "rcgeom/plucker.hpp"

namespace rc {
namespace {

PolyVec4 constant(const Vec4& a) { return {UniPoly(a[0]), UniPoly(a[1]), UniPoly(a[2]), UniPoly(a[3])}; }

// Σ_k f_k(u) g_k(v).
BiPoly pair_uv(const PolyVec4& f, const PolyVec4& g) {
  BiPoly out;
  for (int k = 0; k < 4; ++k) out += BiPoly::from_u(f[k]) * BiPoly::from_v(g[k]);
  return out;
}

bool all_zero(const PolyVec4& x) {
  return std::all_of(x.begin(), x.end(), [](const UniPoly& c) { return c.is_zero(); });
}

// Common factor of the 2x2 minors of [s; ṡ]: parameters where the
// derivative is proportional to the point (cusps).
UniPoly cusp_factor(const CurveMap& s) {
  const PolyVec4& x = s.components();
  const PolyVec4 dx = s.derivative();
  UniPoly g;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) g = poly_gcd(g, x[i] * dx[j] - x[j] * dx[i]);
  return g.is_zero() ? UniPoly(1) : g;
}

std::vector<SilhouetteMark> find_marks(const UniPoly& marks, const CurveMap& s, std::vector<std::string>& warnings,
                                       const char* name) {
  std::vector<SilhouetteMark> out;
  if (marks.degree() < 1) return out;
  for (const auto& r : roots(marks)) {
    SilhouetteMark m{r, std::nullopt, {}};
    if (r.exact) {
      m.exact = canonical(s.eval(*r.exact));
      m.approx = to_approx(*m.exact);
    } else {
      m.approx = s.eval(r.approx.value);
    }
    for (int k = 0; k < r.multiplicity; ++k) out.push_back(m);
  }
  // Self-intersections: two parameters with the same image point.
  std::vector<bool> node(out.size(), false);
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      if (std::abs(out[i].parameter.approx.value - out[j].parameter.approx.value) < 1e-9) continue;
      if (projective_distance(out[i].approx, out[j].approx) < 1e-9) node[i] = node[j] = true;
    }
  std::vector<SilhouetteMark> kept;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (node[i]) {
      warnings.push_back(std::string("node of ") + name + " removed from the marks");
      continue;
    }
    kept.push_back(out[i]);
  }
  return kept;
}

std::complex<double> pairing_numeric(const Vec4& a, const ApproxPoint& p, const Vec4& b, const ApproxPoint& q,
                                     double& scale) {
  const auto X = wedge(to_approx(a), p), Y = wedge(to_approx(b), q);
  double nx = 0, ny = 0;
  for (int k = 0; k < 6; ++k) {
    nx += std::norm(X[k]);
    ny += std::norm(Y[k]);
  }
  scale = std::sqrt(nx * ny);
  return plucker_pairing(X, Y);
}

}  // namespace

std::pair<BiPoly, BiPoly> correspondence_curves(const CurveMap& c_a, const Vec4& a, const CurveMap& c_b,
                                                const Vec4& b) {
  const PolyVec4 A = constant(a), B = constant(b);
  // det[w, x, y, z] = join3(x, y, z) · w; rearranged so u stays on c_a.
  const PolyVec4 ja = join3(c_a.derivative(), A, c_a.components());  // det[c_b, ċ_a, a, c_a]
  const PolyVec4 jb = join3(c_b.derivative(), B, c_b.components());  // det[c_a, ċ_b, b, c_b]
  BiPoly E1 = pair_uv(ja, c_b.components());
  BiPoly E2 = pair_uv(c_a.components(), jb);
  return {E1, E2};
}

TwoContourReport ruled_from_two_contours(const CurveMap& c_a, const Vec4& a, const CurveMap& c_b, const Vec4& b) {
  if (proportional(a, b)) fail(ErrorKind::InvalidInput, "reconstruct", "viewpoints coincide");
  const auto [E1, E2] = correspondence_curves(c_a, a, c_b, b);
  if (E1.is_zero() || E2.is_zero())
    fail(ErrorKind::Degenerate, "reconstruct", "correspondence curve vanishes identically");
  TwoContourReport rep;
  rep.delta = bipoly_gcd(E1, E2);
  for (const auto& f : bilinear_factors(rep.delta)) {
    RuledCandidate cand{f, f.as_mobius(), std::nullopt, false, {}};
    const CurveMap cb_psi = c_b.reparameterize(cand.psi);
    try {
      RuledSurface R(c_a, cb_psi);
      const bool ok_a = contour(R, a).map == c_a;
      const bool ok_b = contour(R, b).map == cb_psi;
      cand.consistent = ok_a && ok_b;
      if (!cand.consistent) cand.note = "contours not reproduced";
      cand.surface = std::move(R);
    } catch (const Error& e) {
      cand.note = e.what();
    }
    rep.candidates.push_back(std::move(cand));
  }
  std::vector<int> ok;
  for (std::size_t i = 0; i < rep.candidates.size(); ++i)
    if (rep.candidates[i].consistent) ok.push_back(static_cast<int>(i));
  if (ok.empty())
    fail(ErrorKind::Inconsistent, "reconstruct", "no consistent ruled surface", "gcd = " + rep.delta.to_string());
  if (ok.size() > 1) {
    std::string detail;
    for (int i : ok) detail += rep.candidates[i].psi.to_string('u') + "; ";
    fail(ErrorKind::Degenerate, "reconstruct", "several ruled surfaces share both contours", detail);
  }
  rep.accepted = ok.front();
  return rep;
}

std::pair<CurveMap, CurveMap> lift_silhouette_pair(const CurveMap& s_a, const Vec4& a, const CurveMap& s_b,
                                                   const Vec4& b) {
  const PolyVec4 A = constant(a), B = constant(b);
  const PolyVec4 &sa = s_a.components(), &sb = s_b.components();
  const PolyVec4 dsa = s_a.derivative(), dsb = s_b.derivative();
  const PolyVec4 plane_b = join3(B, sb, dsb);  // x ↦ det[x, b, s_b, ṡ_b]
  const PolyVec4 plane_a = join3(A, sa, dsa);  // x ↦ det[x, a, s_a, ṡ_a]
  const UniPoly kb = dot4(plane_b, A), ka = dot4(plane_a, B);
  const UniPoly mb = dot4(plane_b, sa), ma = dot4(plane_a, sb);
  PolyVec4 ca, cb;
  for (int j = 0; j < 4; ++j) {
    ca[j] = kb * sa[j] - mb * A[j];
    cb[j] = ka * sb[j] - ma * B[j];
  }
  if (all_zero(ca) || all_zero(cb))
    fail(ErrorKind::Degenerate, "reconstruct", "lift vanishes identically: silhouettes do not correspond");
  return {CurveMap(ca), CurveMap(cb)};
}

TwoSilhouetteReport ruled_from_two_silhouettes(const CurveMap& s_a, const Vec4& a, const CurveMap& s_b,
                                               const Vec4& b) {
  if (proportional(a, b)) fail(ErrorKind::InvalidInput, "reconstruct", "viewpoints coincide");
  TwoSilhouetteReport rep;
  const PolyVec4 A = constant(a), B = constant(b);
  // (1) tangent marks, cusps removed exactly, nodes numerically.
  rep.marks_b_polynomial = det4(A, B, s_b.components(), s_b.derivative());
  rep.marks_a_polynomial = det4(B, A, s_a.components(), s_a.derivative());
  if (rep.marks_a_polynomial.is_zero() || rep.marks_b_polynomial.is_zero())
    fail(ErrorKind::Degenerate, "reconstruct", "mark equation vanishes identically");
  rep.cusps_a = cusp_factor(s_a);
  rep.cusps_b = cusp_factor(s_b);
  const UniPoly ma = strip_common_factors(rep.marks_a_polynomial, rep.cusps_a);
  const UniPoly mb = strip_common_factors(rep.marks_b_polynomial, rep.cusps_b);
  rep.marks_a = find_marks(ma, s_a, rep.warnings, "S_a");
  rep.marks_b = find_marks(mb, s_b, rep.warnings, "S_b");
  const int na = static_cast<int>(rep.marks_a.size()), nb = static_cast<int>(rep.marks_b.size());
  if (na < 3 || nb < 3)
    fail(ErrorKind::Degenerate, "reconstruct", "fewer than three regular marks",
         std::to_string(na) + " on S_a, " + std::to_string(nb) + " on S_b");

  // (2) Plücker incidence matrix and matching.
  rep.pairing.assign(na, std::vector<std::complex<double>>(nb));
  rep.pairing_exact.assign(na, std::vector<std::optional<Scalar>>(nb));
  std::vector<std::vector<bool>> meets(na, std::vector<bool>(nb, false));
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      const auto &p = rep.marks_a[i], &q = rep.marks_b[j];
      if (p.exact && q.exact) {
        const Scalar v = plucker_pairing(wedge(a, *p.exact), wedge(b, *q.exact));
        rep.pairing_exact[i][j] = v;
        rep.pairing[i][j] = v.to_complex();
        meets[i][j] = v.is_zero();
      } else {
        double scale = 1;
        rep.pairing[i][j] = pairing_numeric(a, p.approx, b, q.approx, scale);
        meets[i][j] = std::abs(rep.pairing[i][j]) <= 1e-6 * scale;
      }
    }
  std::vector<int> used(nb, 0);
  for (int i = 0; i < na; ++i) {
    int hit = -1, count = 0;
    for (int j = 0; j < nb; ++j)
      if (meets[i][j]) {
        hit = j;
        ++count;
      }
    if (count > 1) fail(ErrorKind::Degenerate, "reconstruct", "ambiguous mark matching: non-generic input");
    if (count == 1) {
      rep.matching.push_back({i, hit});
      ++used[hit];
    }
  }
  for (int j = 0; j < nb; ++j)
    if (used[j] > 1) fail(ErrorKind::Degenerate, "reconstruct", "ambiguous mark matching: non-generic input");
  if (rep.matching.size() < 3) fail(ErrorKind::Degenerate, "reconstruct", "fewer than three matched marks");

  // (3) reparameterization s ↦ u from three matched pairs, verified on all.
  std::optional<MobiusTransform> phi;
  for (std::size_t x = 0; x < rep.matching.size() && !phi; ++x)
    for (std::size_t y = x + 1; y < rep.matching.size() && !phi; ++y)
      for (std::size_t z = y + 1; z < rep.matching.size() && !phi; ++z) {
        const std::array<std::pair<int, int>, 3> tri{rep.matching[x], rep.matching[y], rep.matching[z]};
        bool exact = true;
        for (const auto& [i, j] : tri) exact = exact && rep.marks_a[i].parameter.exact && rep.marks_b[j].parameter.exact;
        try {
          if (exact) {
            std::array<std::pair<ParamValue, ParamValue>, 3> pairs;
            for (int k = 0; k < 3; ++k)
              pairs[k] = {ParamValue{*rep.marks_a[tri[k].first].parameter.exact},
                          ParamValue{*rep.marks_b[tri[k].second].parameter.exact}};
            phi = mobius_from_three_pairs(pairs);
          } else {
            std::array<std::pair<std::complex<double>, std::complex<double>>, 3> pairs;
            for (int k = 0; k < 3; ++k)
              pairs[k] = {rep.marks_a[tri[k].first].parameter.approx.value,
                          rep.marks_b[tri[k].second].parameter.approx.value};
            phi = mobius_from_three_pairs(pairs);
          }
        } catch (const Error&) {
          phi.reset();
        }
      }
  if (!phi) fail(ErrorKind::Degenerate, "reconstruct", "matched marks do not determine a reparameterization");
  for (const auto& [i, j] : rep.matching) {
    const auto sv = rep.marks_a[i].parameter.approx.value, uv = rep.marks_b[j].parameter.approx.value;
    if (std::abs(phi->apply(sv) - uv) > 1e-6 * (1 + std::abs(uv)))
      fail(ErrorKind::Inconsistent, "reconstruct", "matched marks are not related by one reparameterization");
  }
  rep.phi = *phi;

  // (4) lift and (5) assemble.
  const CurveMap sb_s = s_b.reparameterize(rep.phi);
  std::tie(rep.c_a, rep.c_b) = lift_silhouette_pair(s_a, a, sb_s, b);
  rep.surface = RuledSurface(rep.c_a, rep.c_b);
  return rep;
}

bool same_surface(const RuledSurface& R1, const RuledSurface& R2, Rng& rng, int samples) {
  if (R1.ruling_degree() != R2.ruling_degree()) return false;
  for (int k = 0; k < samples; ++k) {
    const Scalar s(rng.rational(30, 7)), t0(rng.rational(30, 7)), t1(rng.rational(30, 7));
    const Vec4 x = R1.point(s, t0, t1), y = R2.point(s, t0, t1);
    if (!is_zero(x) && !contains(R2, x)) return false;
    if (!is_zero(y) && !contains(R1, y)) return false;
  }
  return true;
}

}  // namespace rc
