#include "rcgeom/syzygy.hpp"

#include <algorithm>
#include <map>

#include "rcgeom/errors.hpp"
#include "rcgeom/projective.hpp"

namespace rc {
namespace {

using Exponent = HomPoly::Exponent;

// Coordinates of a form in the monomial basis of its degree.
Vector coords(const HomPoly& f, int d) {
  const auto mons = monomials(d);
  Vector v;
  v.reserve(mons.size());
  for (const auto& e : mons) v.push_back(f.is_zero() ? Scalar(0) : f.coeff(e));
  return v;
}

HomPoly monomial(const Exponent& e) {
  HomPoly m(e[0] + e[1] + e[2] + e[3]);
  m.add_term(e, Scalar(1));
  return m;
}

struct Unknowns {
  std::vector<int> h_deg, l_deg;
  std::vector<int> h_off, l_off;
  int total = 0;
};

// Raw solution space: vectors of all coefficients of (H_i, L_i).
std::vector<Vector> solve_raw(const std::vector<HomPoly>& G, const Vec4& a, int d, Unknowns& u) {
  const int n = static_cast<int>(G.size());
  u = {};
  for (int i = 0; i < n; ++i) {
    u.h_deg.push_back(d - G[i].degree());
    u.l_deg.push_back(d - 1 - G[i].degree());
  }
  for (int i = 0; i < n; ++i) {
    u.h_off.push_back(u.total);
    u.total += u.h_deg[i] >= 0 ? static_cast<int>(monomials(u.h_deg[i]).size()) : 0;
  }
  for (int i = 0; i < n; ++i) {
    u.l_off.push_back(u.total);
    u.total += u.l_deg[i] >= 0 ? static_cast<int>(monomials(u.l_deg[i]).size()) : 0;
  }
  if (u.total == 0 || d < 1) return {};
  // Column k holds the coefficients of (unknown monomial) × (its factor).
  const auto rows_mons = monomials(d - 1);
  std::map<Exponent, int> row_of;
  for (std::size_t r = 0; r < rows_mons.size(); ++r) row_of[rows_mons[r]] = static_cast<int>(r);
  Matrix m(rows_mons.size(), Vector(u.total, Scalar(0)));
  auto fill = [&](int col, const HomPoly& prod) {
    for (const auto& [e, c] : prod.terms()) m[row_of.at(e)][col] += c;
  };
  for (int i = 0; i < n; ++i) {
    const HomPoly DG = G[i].directional(a);
    if (u.h_deg[i] >= 0) {
      const auto mons = monomials(u.h_deg[i]);
      for (std::size_t k = 0; k < mons.size(); ++k) fill(u.h_off[i] + static_cast<int>(k), monomial(mons[k]) * DG);
    }
    if (u.l_deg[i] >= 0) {
      const auto mons = monomials(u.l_deg[i]);
      for (std::size_t k = 0; k < mons.size(); ++k)
        fill(u.l_off[i] + static_cast<int>(k), Scalar(-1) * (monomial(mons[k]) * G[i]));
    }
  }
  return nullspace(m, u.total);
}

SyzygySolution unpack(const Vector& x, const std::vector<HomPoly>& G, const Unknowns& u, int d) {
  SyzygySolution s;
  s.F = HomPoly(d);
  for (std::size_t i = 0; i < G.size(); ++i) {
    HomPoly h(std::max(u.h_deg[i], 0)), l(std::max(u.l_deg[i], 0));
    if (u.h_deg[i] >= 0) {
      const auto mons = monomials(u.h_deg[i]);
      for (std::size_t k = 0; k < mons.size(); ++k) h.add_term(mons[k], x[u.h_off[i] + k]);
      s.F += h * G[i];
    }
    if (u.l_deg[i] >= 0) {
      const auto mons = monomials(u.l_deg[i]);
      for (std::size_t k = 0; k < mons.size(); ++k) l.add_term(mons[k], x[u.l_off[i] + k]);
    }
    s.H.push_back(h);
    s.L.push_back(l);
  }
  return s;
}

// Vectors of the F-space (degree d) spanned by the known reducible solutions.
std::vector<Vector> spurious_span(const std::vector<HomPoly>& G, const Vec4& a, int d) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i; j < G.size(); ++j) {
      const int rest = d - G[i].degree() - G[j].degree();
      if (rest < 0) continue;
      const HomPoly prod = G[i] * G[j];
      for (const auto& e : monomials(rest)) out.push_back(coords(monomial(e) * prod, d));
    }
  int lowest = 1;
  for (const auto& g : G) lowest = std::max(lowest, g.degree());
  for (int dl = lowest; dl < d; ++dl) {
    const SyzygyResult lower = syzygy_surfaces(G, a, dl);
    for (const auto& s : lower.solutions)
      for (const auto& e : monomials(d - dl)) out.push_back(coords(monomial(e) * s.F, d));
  }
  return out;
}

}  // namespace

HomPoly syzygy_residual(const std::vector<HomPoly>& G, const Vec4& a, const SyzygySolution& sol) {
  HomPoly r(0);
  for (std::size_t i = 0; i < G.size(); ++i) {
    r += sol.H[i] * G[i].directional(a);
    r -= sol.L[i] * G[i];
  }
  return r;
}

SyzygyResult syzygy_surfaces(const std::vector<HomPoly>& G, const Vec4& a, int d) {
  if (G.empty()) fail(ErrorKind::InvalidInput, "reconstruct", "no curve equations given");
  for (const auto& g : G)
    if (g.is_zero() || g.degree() < 1) fail(ErrorKind::InvalidInput, "reconstruct", "curve equations must be nonconstant forms");
  if (is_zero(a)) fail(ErrorKind::InvalidInput, "reconstruct", "zero viewpoint");
  SyzygyResult result;
  Unknowns u;
  const auto raw = solve_raw(G, a, d, u);
  if (raw.empty()) return result;

  // Independent F images, each with one representative multiplier set.
  const int nf = static_cast<int>(monomials(d).size());
  Matrix stacked;
  for (const auto& x : raw) {
    const SyzygySolution s = unpack(x, G, u, d);
    Vector row = coords(s.F, d);
    row.insert(row.end(), x.begin(), x.end());
    stacked.push_back(std::move(row));
  }
  const auto pivots = rref(stacked);
  std::vector<Vector> fvecs, xvecs;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] >= nf) break;  // remaining rows have F = 0
    fvecs.emplace_back(stacked[r].begin(), stacked[r].begin() + nf);
    xvecs.emplace_back(stacked[r].begin() + nf, stacked[r].end());
  }
  const int m = static_cast<int>(fvecs.size());
  if (m == 0) return result;

  // Combinations c with Σ c_k F_k in the spurious span: null vectors of
  // [F_1 … F_m | −S_1 … −S_r] restricted to their first m entries.
  const auto S = spurious_span(G, a, d);
  Matrix sys(nf, Vector(m + S.size(), Scalar(0)));
  for (int row = 0; row < nf; ++row) {
    for (int k = 0; k < m; ++k) sys[row][k] = fvecs[k][row];
    for (std::size_t j = 0; j < S.size(); ++j) sys[row][m + j] = -S[j][row];
  }
  Matrix combos;
  for (const auto& v : nullspace(sys, m + static_cast<int>(S.size()))) {
    Vector c(v.begin(), v.begin() + m);
    bool zero = std::all_of(c.begin(), c.end(), [](const Scalar& x) { return x.is_zero(); });
    if (!zero) combos.push_back(std::move(c));
  }
  const int spur = combos.empty() ? 0 : rank(combos);
  // Basis: spurious combinations first, then unit vectors completing it.
  Matrix basis;
  if (spur > 0) {
    Matrix reduced = combos;
    const auto piv = rref(reduced);
    for (std::size_t r = 0; r < piv.size(); ++r) basis.push_back(reduced[r]);
  }
  for (int k = 0; k < m && static_cast<int>(basis.size()) < m; ++k) {
    Vector e(m, Scalar(0));
    e[k] = 1;
    Matrix trial = basis;
    trial.push_back(e);
    if (rank(trial) > static_cast<int>(basis.size())) basis.push_back(std::move(e));
  }
  for (std::size_t b = 0; b < basis.size(); ++b) {
    Vector x(u.total, Scalar(0));
    for (int k = 0; k < m; ++k)
      if (!basis[b][k].is_zero())
        for (int j = 0; j < u.total; ++j) x[j] += basis[b][k] * xvecs[k][j];
    SyzygySolution s = unpack(x, G, u, d);
    // Normalize the scale by F.
    std::vector<Scalar> fc;
    for (auto it = s.F.terms().rbegin(); it != s.F.terms().rend(); ++it) fc.push_back(it->second);
    const Scalar f = canonical_scale(fc);
    s.F *= f;
    for (auto& h : s.H) h *= f;
    for (auto& l : s.L) l *= f;
    s.spurious = static_cast<int>(b) < spur;
    if (!syzygy_residual(G, a, s).is_zero())
      fail(ErrorKind::Internal, "reconstruct", "syzygy solution fails its defining identity");
    result.solutions.push_back(std::move(s));
  }
  result.spurious_dimension = spur;
  return result;
}

}  // namespace rc
