#include "rcgeom/bilinear.hpp"

#include <algorithm>

#include "rcgeom/errors.hpp"
#include "rcgeom/roots.hpp"

namespace rc {

BiPoly BilinearFactor::poly() const {
  return BiPoly::monomial(a11, 1, 1) - BiPoly::monomial(a10, 1, 0) + BiPoly::monomial(a01, 0, 1) -
         BiPoly(a00);
}

MobiusTransform BilinearFactor::as_mobius() const { return {a10, a00, a11, a01}; }

BilinearFactor BilinearFactor::from_mobius(const MobiusTransform& m) { return {m.c(), m.a(), m.d(), m.b()}; }

BilinearFactor BilinearFactor::canonical() const {
  const std::array<Scalar, 4> xs{a11, a10, a01, a00};
  const Scalar f = canonical_scale(xs);
  return {a11 * f, a10 * f, a01 * f, a00 * f};
}

bool operator==(const BilinearFactor& x, const BilinearFactor& y) {
  const auto cx = x.canonical(), cy = y.canonical();
  return cx.a11 == cy.a11 && cx.a10 == cy.a10 && cx.a01 == cy.a01 && cx.a00 == cy.a00;
}

namespace {

// F(u, φ(u)) homogenized: Σ_j F_j(u) (a u + b)^j (c u + d)^(n − j).
bool vanishes_on_graph(const std::vector<UniPoly>& fj, const MobiusTransform& m) {
  const int n = static_cast<int>(fj.size()) - 1;
  const UniPoly num({m.b(), m.a()}), den({m.d(), m.c()});
  std::vector<UniPoly> np{UniPoly(1)}, dp{UniPoly(1)};
  for (int k = 1; k <= n; ++k) {
    np.push_back(np.back() * num);
    dp.push_back(dp.back() * den);
  }
  UniPoly acc;
  for (int j = 0; j <= n; ++j)
    if (!fj[j].is_zero()) acc += fj[j] * np[j] * dp[n - j];
  return acc.is_zero();
}

}  // namespace

std::vector<BilinearFactor> bilinear_factors(const BiPoly& F) {
  if (F.is_zero()) fail(ErrorKind::InvalidInput, "exactmath", "bilinear factor of the zero polynomial");
  std::vector<BilinearFactor> found;
  const int n = F.degree_v();
  if (n < 1 || F.degree_u() < 1) return found;
  const std::vector<UniPoly> fj = F.v_coeffs();  // F = Σ_j fj[j](u) v^j
  const UniPoly& lead = fj.back();
  // Factors are sought over the field generated by F's coefficients.
  bool real = true;
  for (const auto& [k, c] : F.terms()) real = real && c.is_real();

  // Four sample abscissae where no root in v escapes to infinity.
  std::vector<Scalar> us;
  std::vector<std::vector<Scalar>> vroots;
  for (long k = 0; us.size() < 4 && k < 400; ++k) {
    const Scalar u0((k % 2 == 0) ? k / 2 : -(k + 1) / 2);
    if (lead.eval(u0).is_zero()) continue;
    UniPoly slice = F.eval_u(u0);
    us.push_back(u0);
    std::vector<Scalar> rs = exact_roots(slice);
    if (real) std::erase_if(rs, [](const Scalar& r) { return !r.is_real(); });
    vroots.push_back(std::move(rs));
    if (vroots.back().empty()) return found;  // every bilinear factor gives a rational root here
  }
  if (us.size() < 4) return found;

  auto seen = [&](const BilinearFactor& b) { return std::find(found.begin(), found.end(), b) != found.end(); };
  for (const auto& r0 : vroots[0])
    for (const auto& r1 : vroots[1])
      for (const auto& r2 : vroots[2]) {
        if (r0 == r1 || r1 == r2 || r0 == r2) continue;
        MobiusTransform m = MobiusTransform::identity();
        try {
          m = mobius_from_three_pairs({{{{us[0], false}, {r0, false}},
                                        {{us[1], false}, {r1, false}},
                                        {{us[2], false}, {r2, false}}}});
        } catch (const Error&) {
          continue;
        }
        const ParamValue v3 = m.apply(ParamValue{us[3], false});
        if (v3.infinite || std::find(vroots[3].begin(), vroots[3].end(), v3.value) == vroots[3].end()) continue;
        const BilinearFactor b = BilinearFactor::from_mobius(m).canonical();
        if (seen(b) || !vanishes_on_graph(fj, m)) continue;
        found.push_back(b);
      }
  std::stable_partition(found.begin(), found.end(), [](const BilinearFactor& b) { return !b.a11.is_zero(); });
  return found;
}

std::optional<BilinearFactor> bilinear_factor(const BiPoly& F) {
  auto all = bilinear_factors(F);
  if (all.empty()) return std::nullopt;
  return all.front();
}

}  // namespace rc
