#include "rcgeom/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rcgeom/errors.hpp"

namespace rc {
namespace {

using cld = std::complex<long double>;

Scalar exact_point(std::complex<double> z) { return Scalar(Rational(z.real()), Rational(z.imag())); }

// Certified inclusion radius n·|g(z)/g'(z)| for a square-free g of
// degree n, with g and g' evaluated exactly at the double point z.
double inclusion_radius(const UniPoly& g, const UniPoly& dg, std::complex<double> z) {
  const Scalar x = exact_point(z);
  const Scalar gv = g.eval(x);
  if (gv.is_zero()) return 0.0;
  const Scalar dv = dg.eval(x);
  if (dv.is_zero()) return INFINITY;
  const double ratio = std::sqrt(gv.norm().get_d() / dv.norm().get_d());
  return g.degree() * ratio * (1.0 + 1e-12);
}

// Newton correction computed exactly, rounded to double.
std::complex<double> exact_newton(const UniPoly& g, const UniPoly& dg, std::complex<double> z) {
  const Scalar x = exact_point(z);
  const Scalar dv = dg.eval(x);
  if (dv.is_zero()) return z;
  const Scalar step = g.eval(x) / dv;
  return z - step.to_complex();
}

// Simultaneous Aberth–Ehrlich iteration on a square-free polynomial.
std::vector<std::complex<double>> aberth(const UniPoly& g) {
  const int n = g.degree();
  std::vector<cld> c(n + 1);
  for (int k = 0; k <= n; ++k) {
    const Scalar& x = g.coeffs()[k];
    c[k] = cld(x.re().get_d(), x.im().get_d());
  }
  const cld lead = c[n];
  for (auto& x : c) x /= lead;
  long double bound = 0;
  for (int k = 0; k < n; ++k) bound = std::max(bound, std::pow(std::abs(c[k]), 1.0L / (n - k)));
  bound = 2 * bound + 1e-3L;
  auto eval = [&](cld z, cld& dv) {
    cld v = c[n];
    dv = 0;
    for (int k = n - 1; k >= 0; --k) {
      dv = dv * z + v;
      v = v * z + c[k];
    }
    return v;
  };
  std::vector<cld> z(n);
  for (int k = 0; k < n; ++k) {
    const long double ang = 2 * std::numbers::pi_v<long double> * k / n + 0.4L;
    z[k] = std::polar(bound * (0.5L + 0.5L * (k + 1) / n), ang);
  }
  for (int iter = 0; iter < 2000; ++iter) {
    long double worst = 0;
    for (int k = 0; k < n; ++k) {
      cld dv;
      const cld v = eval(z[k], dv);
      if (v == cld(0)) continue;
      const cld ratio = v / dv;
      cld sum = 0;
      for (int j = 0; j < n; ++j)
        if (j != k) sum += 1.0L / (z[k] - z[j]);
      const cld w = ratio / (1.0L - ratio * sum);
      z[k] -= w;
      worst = std::max(worst, std::abs(w) / (1 + std::abs(z[k])));
    }
    if (worst < 1e-18L) break;
  }
  std::vector<std::complex<double>> out(n);
  for (int k = 0; k < n; ++k) out[k] = {static_cast<double>(z[k].real()), static_cast<double>(z[k].imag())};
  return out;
}

struct SimpleRoot {
  ComplexApprox approx;
  std::optional<Scalar> exact;
};

std::vector<SimpleRoot> squarefree_roots(const UniPoly& g, const RationalizeOptions& opt) {
  std::vector<SimpleRoot> out;
  if (g.degree() == 1) {
    Scalar r = -g.coeff(0) / g.coeff(1);
    out.push_back({{r.to_complex(), 0.0}, r});
    return out;
  }
  const UniPoly dg = g.derivative();
  for (auto z : aberth(g)) {
    if (auto q = rationalize(z, opt); q && g.eval(*q).is_zero()) {
      out.push_back({{q->to_complex(), 0.0}, *q});
      continue;
    }
    double rad = inclusion_radius(g, dg, z);
    for (int k = 0; k < 4 && rad > kRootRadius * 1e-3; ++k) {
      auto z2 = exact_newton(g, dg, z);
      double rad2 = inclusion_radius(g, dg, z2);
      if (!(rad2 < rad)) break;
      z = z2;
      rad = rad2;
    }
    if (!(rad <= kRootRadius))
      fail(ErrorKind::Internal, "exactmath", "root isolation did not reach the certified radius", g.to_string());
    out.push_back({{z, rad}, std::nullopt});
  }
  return out;
}

}  // namespace

std::vector<Root> roots(const UniPoly& f, const RationalizeOptions& opt) {
  if (f.is_zero()) fail(ErrorKind::InvalidInput, "exactmath", "roots of the zero polynomial are undefined");
  std::vector<Root> out;
  const auto parts = square_free_decomposition(f);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].degree() < 1) continue;
    for (auto& r : squarefree_roots(parts[i], opt))
      out.push_back({r.approx, std::move(r.exact), static_cast<int>(i + 1)});
  }
  std::sort(out.begin(), out.end(), [](const Root& x, const Root& y) {
    if (x.approx.value.real() != y.approx.value.real()) return x.approx.value.real() < y.approx.value.real();
    return x.approx.value.imag() < y.approx.value.imag();
  });
  return out;
}

std::vector<ComplexApprox> complex_roots(const UniPoly& f) {
  std::vector<ComplexApprox> out;
  for (const auto& r : roots(f))
    for (int k = 0; k < r.multiplicity; ++k) out.push_back(r.approx);
  return out;
}

std::vector<Scalar> exact_roots(const UniPoly& f, const RationalizeOptions& opt) {
  std::vector<Scalar> out;
  for (const auto& r : roots(f, opt))
    if (r.exact) out.push_back(*r.exact);
  return out;
}

}  // namespace rc
