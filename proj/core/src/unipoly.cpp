#include "rcgeom/unipoly.hpp"

#include <sstream>

#include "rcgeom/errors.hpp"
#include "rcgeom/linalg.hpp"

namespace rc {

UniPoly::UniPoly(Scalar c) {
  if (!c.is_zero()) c_.push_back(std::move(c));
}

UniPoly::UniPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(Scalar c, int k) {
  if (c.is_zero()) return {};
  std::vector<Scalar> v(k + 1, Scalar(0));
  v[k] = std::move(c);
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool UniPoly::is_real() const {
  for (const auto& c : c_)
    if (!c.is_real()) return false;
  return true;
}

Scalar UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Scalar(0);
  return c_[k];
}

Scalar UniPoly::eval(const Scalar& s) const {
  Scalar acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= s;
    acc += *it;
  }
  return acc;
}

std::complex<double> UniPoly::eval(std::complex<double> s) const {
  std::complex<double> acc(0.0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * s + it->to_complex();
  return acc;
}

std::complex<long double> UniPoly::eval(std::complex<long double> s) const {
  std::complex<long double> acc(0.0L);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    std::complex<long double> c(it->re().get_d(), it->im().get_d());
    acc = acc * s + c;
  }
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Scalar> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Scalar(static_cast<long>(k));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  return *this * lead().inverse();
}

UniPoly UniPoly::canonical() const {
  if (is_zero()) return {};
  std::vector<Scalar> rev(c_.rbegin(), c_.rend());
  return *this * canonical_scale(rev);
}

UniPoly UniPoly::reversed(int degree) const {
  if (is_zero()) return {};
  if (degree < this->degree()) fail(ErrorKind::Internal, "exactmath", "reversal degree below polynomial degree");
  std::vector<Scalar> r(degree + 1, Scalar(0));
  for (int k = 0; k <= this->degree(); ++k) r[degree - k] = c_[k];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::conj() const {
  std::vector<Scalar> r;
  r.reserve(c_.size());
  for (const auto& c : c_) r.push_back(c.conj());
  return UniPoly(std::move(r));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      r[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return UniPoly(std::move(r));
}

UniPoly& UniPoly::operator*=(const UniPoly& o) { return *this = *this * o; }

UniPoly& UniPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

std::string UniPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    if (c_[k].is_zero()) continue;
    std::string c = rc::to_string(c_[k]);
    if (!c_[k].is_real() && sgn(c_[k].re()) != 0) c = "(" + c + ")";
    if (!first) os << (c[0] == '-' ? " - " : " + ");
    if (!first && c[0] == '-') c = c.substr(1);
    first = false;
    if (k == 0) {
      os << c;
      continue;
    }
    if (c == "1")
      c.clear();
    else if (c == "-1")
      c = "-";
    else
      c += "*";
    os << c << var;
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

UniPoly pow(const UniPoly& f, int e) {
  UniPoly r(1), b = f;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& f, const UniPoly& g) {
  if (g.is_zero()) fail(ErrorKind::Internal, "exactmath", "polynomial division by zero");
  if (f.degree() < g.degree()) return {UniPoly(), f};
  std::vector<Scalar> r = f.coeffs();
  const auto& gc = g.coeffs();
  const int dg = g.degree();
  std::vector<Scalar> q(f.degree() - dg + 1, Scalar(0));
  Scalar inv = g.lead().inverse();
  for (int k = f.degree() - dg; k >= 0; --k) {
    const Scalar& top = r[k + dg];
    if (top.is_zero()) continue;
    Scalar t = top * inv;
    for (int j = 0; j <= dg; ++j)
      if (!gc[j].is_zero()) r[k + j] -= t * gc[j];
    q[k] = std::move(t);
  }
  r.resize(dg);
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly exact_div(const UniPoly& f, const UniPoly& g) {
  auto [q, r] = divmod(f, g);
  if (!r.is_zero()) fail(ErrorKind::Internal, "exactmath", "inexact polynomial division");
  return q;
}

bool divides(const UniPoly& g, const UniPoly& f) {
  if (g.is_zero()) return f.is_zero();
  return divmod(f, g).second.is_zero();
}

UniPoly poly_gcd(const UniPoly& f, const UniPoly& g) {
  UniPoly a = f.monic(), b = g.monic();
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

Scalar resultant(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() || g.is_zero()) return Scalar(0);
  const int m = f.degree(), n = g.degree();
  if (m == 0 && n == 0) return Scalar(1);
  // Sylvester matrix of (g, f): m shifted rows of g, then n shifted rows of f.
  const int size = m + n;
  Matrix syl(size, Vector(size, Scalar(0)));
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) syl[r][r + k] = g.coeff(n - k);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) syl[m + r][r + k] = f.coeff(m - k);
  return det(std::move(syl));
}

UniPoly square_free_part(const UniPoly& f) {
  if (f.degree() <= 0) return f.is_zero() ? UniPoly() : UniPoly(1);
  return exact_div(f, poly_gcd(f, f.derivative())).monic();
}

std::vector<UniPoly> square_free_decomposition(const UniPoly& f) {
  std::vector<UniPoly> out;
  if (f.degree() <= 0) return out;
  UniPoly fp = f.derivative();
  UniPoly a = poly_gcd(f, fp);
  UniPoly b = exact_div(f, a);
  UniPoly c = exact_div(fp, a);
  UniPoly d = c - b.derivative();
  while (b.degree() > 0) {
    UniPoly ai = poly_gcd(b, d);
    b = exact_div(b, ai);
    c = exact_div(d, ai);
    d = c - b.derivative();
    out.push_back(ai.monic());
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

UniPoly strip_common_factors(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero()) return f;
  UniPoly r = f;
  UniPoly h = poly_gcd(r, g);
  while (h.degree() > 0) {
    r = exact_div(r, h);
    h = poly_gcd(r, h);
  }
  return r;
}

std::optional<UniPoly> sqrt_up_to_constant(const UniPoly& f) {
  if (f.is_zero()) return UniPoly();
  if (f.degree() % 2 != 0) return std::nullopt;
  UniPoly g = f.monic();
  const int m = g.degree() / 2;
  std::vector<Scalar> h(m + 1, Scalar(0));
  h[m] = 1;
  for (int k = m - 1; k >= 0; --k) {
    Scalar acc = g.coeff(m + k);
    for (int i = k + 1; i < m; ++i) {
      int j = m + k - i;
      if (j > k && j < m) acc -= h[i] * h[j];
    }
    h[k] = acc / Scalar(2);
  }
  UniPoly root(std::move(h));
  if (root * root != g) return std::nullopt;
  return root;
}

UniPoly compose_linear_fractional(const UniPoly& f, const Scalar& a, const Scalar& b, const Scalar& c,
                                  const Scalar& d, int degree) {
  if (f.degree() > degree) fail(ErrorKind::Internal, "exactmath", "homogenization degree below polynomial degree");
  UniPoly num({b, a}), den({d, c});
  UniPoly out;
  std::vector<UniPoly> num_pow{UniPoly(1)}, den_pow{UniPoly(1)};
  for (int k = 1; k <= degree; ++k) {
    num_pow.push_back(num_pow.back() * num);
    den_pow.push_back(den_pow.back() * den);
  }
  for (int k = 0; k <= f.degree(); ++k) {
    if (f.coeff(k).is_zero()) continue;
    out += f.coeff(k) * (num_pow[k] * den_pow[degree - k]);
  }
  return out;
}

}  // namespace rc
