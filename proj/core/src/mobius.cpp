#include "rcgeom/mobius.hpp"

#include <algorithm>
#include <cmath>

#include "rcgeom/errors.hpp"
#include "rcgeom/linalg.hpp"

namespace rc {

std::string to_string(const ParamValue& p) { return p.infinite ? "inf" : to_string(p.value); }

MobiusTransform::MobiusTransform(Scalar a, Scalar b, Scalar c, Scalar d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if ((a_ * d_ - b_ * c_).is_zero())
    fail(ErrorKind::Degenerate, "exactmath", "linear fractional map with ad - bc = 0");
}

ParamValue MobiusTransform::apply(const ParamValue& s) const {
  if (s.infinite) {
    if (c_.is_zero()) return ParamValue::at_infinity();
    return {a_ / c_, false};
  }
  const Scalar den = c_ * s.value + d_;
  if (den.is_zero()) return ParamValue::at_infinity();
  return {(a_ * s.value + b_) / den, false};
}

Scalar MobiusTransform::apply(const Scalar& s) const {
  const ParamValue r = apply(ParamValue{s, false});
  if (r.infinite) fail(ErrorKind::Degenerate, "exactmath", "parameter maps to infinity");
  return r.value;
}

std::complex<double> MobiusTransform::apply(std::complex<double> s) const {
  return (a_.to_complex() * s + b_.to_complex()) / (c_.to_complex() * s + d_.to_complex());
}

MobiusTransform MobiusTransform::inverse() const { return {d_, -b_, -c_, a_}; }

MobiusTransform MobiusTransform::compose(const MobiusTransform& o) const {
  return {a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_, c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_};
}

MobiusTransform MobiusTransform::canonical() const {
  const std::array<Scalar, 4> xs{a_, b_, c_, d_};
  const Scalar f = canonical_scale(xs);
  return {a_ * f, b_ * f, c_ * f, d_ * f};
}

UniPoly MobiusTransform::pullback(const UniPoly& f, int degree) const {
  return compose_linear_fractional(f, a_, b_, c_, d_, degree);
}

bool operator==(const MobiusTransform& x, const MobiusTransform& y) {
  // Projective equality of the coefficient vectors.
  const std::array<Scalar, 4> u{x.a_, x.b_, x.c_, x.d_}, v{y.a_, y.b_, y.c_, y.d_};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (u[i] * v[j] != u[j] * v[i]) return false;
  return true;
}

std::string MobiusTransform::to_string(char var) const {
  const MobiusTransform m = canonical();
  const UniPoly num({m.b_, m.a_}), den({m.d_, m.c_});
  if (den.degree() == 0) {
    const UniPoly q = num * den.lead().inverse();
    return q.to_string(var);
  }
  return "(" + num.to_string(var) + ")/(" + den.to_string(var) + ")";
}

MobiusTransform mobius_from_three_pairs(const std::array<std::pair<ParamValue, ParamValue>, 3>& pairs) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (pairs[i].first == pairs[j].first || pairs[i].second == pairs[j].second)
        fail(ErrorKind::Degenerate, "exactmath", "repeated source or target parameter");
  // Homogeneous condition u1 (a s0 + b s1) − u0 (c s0 + d s1) = 0 for
  // source (s0 : s1) and target (u0 : u1).
  Matrix m;
  for (const auto& [src, dst] : pairs) {
    const Scalar s0 = src.infinite ? Scalar(1) : src.value, s1 = src.infinite ? Scalar(0) : Scalar(1);
    const Scalar u0 = dst.infinite ? Scalar(1) : dst.value, u1 = dst.infinite ? Scalar(0) : Scalar(1);
    m.push_back({u1 * s0, u1 * s1, -u0 * s0, -u0 * s1});
  }
  const auto ns = nullspace(m, 4);
  if (ns.size() != 1) fail(ErrorKind::Degenerate, "exactmath", "parameter pairs do not determine a unique map");
  const auto& x = ns[0];
  return MobiusTransform(x[0], x[1], x[2], x[3]).canonical();
}

MobiusTransform mobius_from_three_pairs(
    const std::array<std::pair<std::complex<double>, std::complex<double>>, 3>& pairs,
    const RationalizeOptions& opt) {
  using C = std::complex<double>;
  const double scale = 1.0 + std::max({std::abs(pairs[0].first), std::abs(pairs[1].first),
                                       std::abs(pairs[2].first), std::abs(pairs[0].second),
                                       std::abs(pairs[1].second), std::abs(pairs[2].second)});
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (std::abs(pairs[i].first - pairs[j].first) < 1e-9 * scale ||
          std::abs(pairs[i].second - pairs[j].second) < 1e-9 * scale)
        fail(ErrorKind::Degenerate, "exactmath", "repeated source or target parameter");
  // Fix one coefficient at a time to 1 and solve the remaining 3x3
  // system; keep the best-conditioned normalization.
  C best[4];
  double best_res = INFINITY;
  for (int fixed = 0; fixed < 4; ++fixed) {
    C a[3][4];
    for (int r = 0; r < 3; ++r) {
      const auto [s, u] = pairs[r];
      const C row[4] = {s, C(1), -u * s, -u};
      int col = 0;
      for (int k = 0; k < 4; ++k)
        if (k != fixed) a[r][col++] = row[k];
      a[r][3] = -row[fixed];
    }
    bool singular = false;
    for (int c = 0; c < 3 && !singular; ++c) {
      int piv = c;
      for (int r = c + 1; r < 3; ++r)
        if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
      if (std::abs(a[piv][c]) < 1e-14) {
        singular = true;
        break;
      }
      for (int k = 0; k < 4; ++k) std::swap(a[c][k], a[piv][k]);
      for (int r = 0; r < 3; ++r) {
        if (r == c) continue;
        const C f = a[r][c] / a[c][c];
        for (int k = c; k < 4; ++k) a[r][k] -= f * a[c][k];
      }
    }
    if (singular) continue;
    C x[4];
    int col = 0;
    for (int k = 0; k < 4; ++k) {
      if (k == fixed) {
        x[k] = C(1);
      } else {
        x[k] = a[col][3] / a[col][col];
        ++col;
      }
    }
    double mx = 0;
    for (auto& v : x) mx = std::max(mx, std::abs(v));
    if (mx > 1e12) continue;
    if (mx < best_res) {  // prefer the normalization with the smallest coefficients
      best_res = mx;
      std::copy(x, x + 4, best);
    }
  }
  if (!std::isfinite(best_res)) fail(ErrorKind::Degenerate, "exactmath", "parameter pairs do not determine a map");
  std::array<Scalar, 4> exact;
  for (int k = 0; k < 4; ++k) {
    auto q = rationalize(best[k], opt);
    if (!q) fail(ErrorKind::Degenerate, "exactmath", "recovered map is not close to a rational map");
    exact[k] = *q;
  }
  MobiusTransform m(exact[0], exact[1], exact[2], exact[3]);
  for (const auto& [s, u] : pairs)
    if (std::abs(m.apply(s) - u) > 1e-6 * (1 + std::abs(u)))
      fail(ErrorKind::Degenerate, "exactmath", "rationalized map does not reproduce the pairs");
  return m.canonical();
}

}  // namespace rc
