#include "rcgeom/bipoly.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <sstream>

#include "rcgeom/errors.hpp"

namespace rc {

BiPoly::BiPoly(Scalar c) {
  if (!c.is_zero()) terms_.emplace(Key{0, 0}, std::move(c));
}

BiPoly BiPoly::u() { return monomial(Scalar(1), 1, 0); }
BiPoly BiPoly::v() { return monomial(Scalar(1), 0, 1); }

BiPoly BiPoly::monomial(Scalar c, int du, int dv) {
  BiPoly r;
  r.add_term(du, dv, c);
  return r;
}

BiPoly BiPoly::from_u(const UniPoly& f) {
  BiPoly r;
  for (int k = 0; k <= f.degree(); ++k) r.add_term(k, 0, f.coeff(k));
  return r;
}

BiPoly BiPoly::from_v(const UniPoly& f) {
  BiPoly r;
  for (int k = 0; k <= f.degree(); ++k) r.add_term(0, k, f.coeff(k));
  return r;
}

BiPoly BiPoly::from_u_coeffs(const std::vector<UniPoly>& c) {
  BiPoly r;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (int j = 0; j <= c[i].degree(); ++j) r.add_term(static_cast<int>(i), j, c[i].coeff(j));
  return r;
}

bool BiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{0, 0});
}

Scalar BiPoly::coeff(int du, int dv) const {
  auto it = terms_.find({du, dv});
  return it == terms_.end() ? Scalar(0) : it->second;
}

void BiPoly::add_term(int du, int dv, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(Key{du, dv}, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

int BiPoly::degree_u() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first);
  return d;
}

int BiPoly::degree_v() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.second);
  return d;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
  return d;
}

std::vector<UniPoly> BiPoly::u_coeffs() const {
  std::vector<std::vector<Scalar>> raw(degree_u() + 1);
  for (const auto& [k, c] : terms_) {
    auto& row = raw[k.first];
    if (static_cast<int>(row.size()) <= k.second) row.resize(k.second + 1, Scalar(0));
    row[k.second] = c;
  }
  std::vector<UniPoly> out;
  out.reserve(raw.size());
  for (auto& row : raw) out.emplace_back(std::move(row));
  return out;
}

std::vector<UniPoly> BiPoly::v_coeffs() const { return swapped().u_coeffs(); }

UniPoly BiPoly::eval_u(const Scalar& u0) const {
  UniPoly out;
  const auto c = swapped().u_coeffs();
  std::vector<Scalar> r;
  for (const auto& p : c) r.push_back(p.eval(u0));
  return UniPoly(std::move(r));
}

UniPoly BiPoly::eval_v(const Scalar& v0) const {
  std::vector<Scalar> r;
  for (const auto& p : u_coeffs()) r.push_back(p.eval(v0));
  return UniPoly(std::move(r));
}

Scalar BiPoly::eval(const Scalar& u0, const Scalar& v0) const { return eval_v(v0).eval(u0); }

std::complex<double> BiPoly::eval(std::complex<double> u0, std::complex<double> v0) const {
  std::complex<double> acc = 0;
  for (const auto& [k, c] : terms_) acc += c.to_complex() * std::pow(u0, k.first) * std::pow(v0, k.second);
  return acc;
}

BiPoly BiPoly::swapped() const {
  BiPoly r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(Key{k.second, k.first}, c);
  return r;
}

BiPoly BiPoly::derivative_u() const {
  BiPoly r;
  for (const auto& [k, c] : terms_)
    if (k.first > 0) r.add_term(k.first - 1, k.second, c * Scalar(k.first));
  return r;
}

BiPoly BiPoly::derivative_v() const {
  BiPoly r;
  for (const auto& [k, c] : terms_)
    if (k.second > 0) r.add_term(k.first, k.second - 1, c * Scalar(k.second));
  return r;
}

BiPoly BiPoly::canonical() const {
  if (is_zero()) return {};
  std::vector<Scalar> cs;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) cs.push_back(it->second);
  return *this * canonical_scale(cs);
}

BiPoly BiPoly::conj() const {
  BiPoly r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, c.conj());
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, x] : terms_) x *= c;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return r;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

std::string BiPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    std::string cs = rc::to_string(c);
    if (!c.is_real() && sgn(c.re()) != 0) cs = "(" + cs + ")";
    const bool neg = cs[0] == '-';
    if (!first) os << (neg ? " - " : " + ");
    if (!first && neg) cs = cs.substr(1);
    first = false;
    const bool unit = k.first + k.second > 0;
    if (unit && cs == "1") cs.clear();
    else if (unit && cs == "-1") cs = "-";
    else if (unit) cs += "*";
    os << cs;
    std::string mono;
    if (k.first > 0) mono += k.first == 1 ? "u" : "u^" + std::to_string(k.first);
    if (k.second > 0) mono += std::string(mono.empty() ? "" : "*") + (k.second == 1 ? "v" : "v^" + std::to_string(k.second));
    os << mono;
  }
  return os.str();
}

BiPoly pow(const BiPoly& f, int e) {
  BiPoly r(1), b = f;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

namespace {

using UPoly = std::vector<UniPoly>;  // polynomial in u over K[v], ascending

void trim(UPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

UniPoly content(const UPoly& a) {
  UniPoly g;
  for (const auto& c : a) {
    g = poly_gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

UPoly primitive(UPoly a) {
  const UniPoly c = content(a);
  if (c.is_zero()) return a;
  for (auto& x : a) x = exact_div(x, c);
  return a;
}

// Pseudo-remainder of a by b (deg_u a >= deg_u b).
UPoly prem(UPoly a, const UPoly& b) {
  const int db = static_cast<int>(b.size()) - 1;
  const UniPoly& lb = b.back();
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int da = static_cast<int>(a.size()) - 1;
    const UniPoly la = a.back();
    for (auto& x : a) x *= lb;
    for (int j = 0; j <= db; ++j) a[da - db + j] -= la * b[j];
    trim(a);
  }
  return a;
}

// Primitive pseudo-remainder sequence: always correct, but the
// coefficients in K[v] grow quickly with the degree.
UPoly prs_gcd(UPoly a, UPoly b) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    if (b.size() == 1) return {UniPoly(1)};
    UPoly r = prem(a, b);
    a = std::move(b);
    b = primitive(std::move(r));
  }
  return a;
}

UniPoly eval_v(const UPoly& a, const Scalar& v0) {
  std::vector<Scalar> c;
  c.reserve(a.size());
  for (const auto& x : a) c.push_back(x.eval(v0));
  return UniPoly(std::move(c));
}

// Newton interpolation through (xs[k], ys[k]).
UniPoly interpolate(const std::vector<Scalar>& xs, std::vector<Scalar> ys) {
  const std::size_t n = xs.size();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t k = n - 1; k >= j; --k) ys[k] = (ys[k] - ys[k - 1]) / (xs[k] - xs[k - j]);
  UniPoly r;
  for (std::size_t k = n; k-- > 0;) r = r * UniPoly({-xs[k], Scalar(1)}) + UniPoly(ys[k]);
  return r;
}

// Evaluation/interpolation gcd of primitive a, b (Brown's scheme over
// Q(i) with the leading-coefficient normalization γ = gcd(lc a, lc b)).
// Returns nullopt when the interpolated candidate fails the exact
// division check, i.e. every evaluation point was unlucky.
std::optional<UPoly> dense_gcd(const UPoly& a, const UPoly& b) {
  const UniPoly gamma = poly_gcd(a.back(), b.back());
  int bound_v = 0;
  for (const auto& x : a) bound_v = std::max(bound_v, x.degree());
  int bound_b = 0;
  for (const auto& x : b) bound_b = std::max(bound_b, x.degree());
  const int needed = std::min(bound_v, bound_b) + gamma.degree() + 1;

  std::vector<Scalar> xs;
  std::vector<UniPoly> images;  // γ(v0)·monic gcd in u
  int deg_u = std::numeric_limits<int>::max();
  for (long v = 1; static_cast<int>(xs.size()) < needed; ++v) {
    if (v > 4 * needed + 64) return std::nullopt;
    const Scalar v0(v);
    const Scalar g0 = gamma.eval(v0);
    if (g0.is_zero()) continue;  // lc a(v0), lc b(v0) ≠ 0 as well
    const UniPoly h = poly_gcd(eval_v(a, v0), eval_v(b, v0));
    if (h.degree() == 0) return UPoly{UniPoly(1)};
    if (h.degree() > deg_u) continue;  // unlucky point
    if (h.degree() < deg_u) {          // all earlier points were unlucky
      deg_u = h.degree();
      xs.clear();
      images.clear();
    }
    xs.push_back(v0);
    images.push_back(h.monic() * g0);
  }
  UPoly c(deg_u + 1);
  for (int j = 0; j <= deg_u; ++j) {
    std::vector<Scalar> ys;
    ys.reserve(xs.size());
    for (const auto& h : images) ys.push_back(h.coeff(j));
    c[j] = interpolate(xs, std::move(ys));
  }
  trim(c);
  c = primitive(std::move(c));
  const BiPoly G = BiPoly::from_u_coeffs(c);
  if (!bipoly_divides(G, BiPoly::from_u_coeffs(a)) || !bipoly_divides(G, BiPoly::from_u_coeffs(b)))
    return std::nullopt;
  return c;
}

}  // namespace

BiPoly bipoly_gcd(const BiPoly& f, const BiPoly& g) {
  if (f.is_zero()) return g.canonical();
  if (g.is_zero()) return f.canonical();
  UPoly a = f.u_coeffs(), b = g.u_coeffs();
  const UniPoly cont = poly_gcd(content(a), content(b));
  a = primitive(std::move(a));
  b = primitive(std::move(b));
  UPoly r;
  if (a.size() == 1 || b.size() == 1) {
    r = {UniPoly(1)};
  } else if (auto d = dense_gcd(a, b)) {
    r = std::move(*d);
  } else {
    r = prs_gcd(std::move(a), std::move(b));
  }
  for (auto& x : r) x *= cont;
  return BiPoly::from_u_coeffs(r).canonical();
}

BiPoly bipoly_exact_div(const BiPoly& f, const BiPoly& g) {
  if (g.is_zero()) fail(ErrorKind::Internal, "exactmath", "bivariate division by zero");
  // Division in K(v)[u] followed by an exactness check.
  UPoly a = f.u_coeffs();
  const UPoly b = g.u_coeffs();
  const int db = static_cast<int>(b.size()) - 1;
  UPoly q(std::max<int>(0, static_cast<int>(a.size()) - db), UniPoly());
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int da = static_cast<int>(a.size()) - 1;
    auto [t, rem] = divmod(a.back(), b.back());
    if (!rem.is_zero()) fail(ErrorKind::Internal, "exactmath", "inexact bivariate division");
    q[da - db] = t;
    for (int j = 0; j <= db; ++j) a[da - db + j] -= t * b[j];
    trim(a);
  }
  if (!a.empty()) fail(ErrorKind::Internal, "exactmath", "inexact bivariate division");
  return BiPoly::from_u_coeffs(q);
}

bool bipoly_divides(const BiPoly& g, const BiPoly& f) {
  try {
    (void)bipoly_exact_div(f, g);
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace rc
