#include "rcgeom/scalar.hpp"

#include <cmath>
#include <ostream>

#include "rcgeom/errors.hpp"

namespace rc {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view num = text, den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!all_digits(den)) fail(ErrorKind::InvalidInput, "exactmath", "bad rational: '" + std::string(text) + "'");
  }
  std::string_view digits = num;
  if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) digits.remove_prefix(1);
  if (!all_digits(digits)) fail(ErrorKind::InvalidInput, "exactmath", "bad rational: '" + std::string(text) + "'");

  mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num), 10);
  mpz_class d(1);
  if (!den.empty()) d = mpz_class(std::string(den), 10);
  if (d == 0) fail(ErrorKind::InvalidInput, "exactmath", "zero denominator: '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorKind::Internal, "exactmath", "division by zero");
  if (is_real()) return Scalar(1 / re_);
  Rational n = norm();
  return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (o.is_real()) {
    re_ *= o.re_;
    if (sgn(im_) != 0) im_ *= o.re_;
    return *this;
  }
  if (is_real()) {
    im_ = re_ * o.im_;
    re_ *= o.re_;
    return *this;
  }
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) fail(ErrorKind::Internal, "exactmath", "division by zero");
  if (o.is_real()) {
    re_ /= o.re_;
    if (sgn(im_) != 0) im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string to_string(const Scalar& x) {
  if (x.is_real()) return to_string(x.re());
  std::string im;
  if (x.im() == 1)
    im = "i";
  else if (x.im() == -1)
    im = "-i";
  else
    im = to_string(x.im()) + "i";
  if (sgn(x.re()) == 0) return im;
  if (im[0] != '-') im = "+" + im;
  return to_string(x.re()) + im;
}

Scalar parse_scalar(std::string_view text) {
  if (text.empty()) fail(ErrorKind::InvalidInput, "exactmath", "empty scalar");
  if (text.back() != 'i') return Scalar(parse_rational(text));
  std::string_view body = text.substr(0, text.size() - 1);
  // The imaginary part starts at the last sign that is not the leading one.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  std::string_view re_part, im_part = body;
  if (split != std::string_view::npos) {
    re_part = body.substr(0, split);
    im_part = body.substr(split);
  }
  Rational im;
  if (im_part.empty() || im_part == "+")
    im = 1;
  else if (im_part == "-")
    im = -1;
  else
    im = parse_rational(im_part);
  Rational re = re_part.empty() ? Rational(0) : parse_rational(re_part);
  return Scalar(re, im);
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << to_string(x); }

std::optional<Rational> rationalize(double x, double tol, long max_den) {
  if (!std::isfinite(x) || std::fabs(x) > 1e15) return std::nullopt;
  // Continued-fraction convergents h/k.
  long double r = x;
  mpz_class h_prev(1), h(static_cast<long>(std::floor(r)));
  mpz_class k_prev(0), k(1);
  long double frac = r - std::floor(r);
  for (int iter = 0; iter < 64; ++iter) {
    Rational cand(h, k);
    if (std::fabs(cand.get_d() - x) <= tol) {
      cand.canonicalize();
      return cand;
    }
    if (frac < 1e-18L) break;
    r = 1.0L / frac;
    long double a = std::floor(r);
    frac = r - a;
    mpz_class ai(static_cast<long>(a));
    mpz_class h_next = ai * h + h_prev;
    mpz_class k_next = ai * k + k_prev;
    if (k_next > max_den) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  return std::nullopt;
}

std::optional<Scalar> rationalize(std::complex<double> z, const RationalizeOptions& opt) {
  auto re = rationalize(z.real(), opt.tolerance, opt.max_denominator);
  auto im = rationalize(z.imag(), opt.tolerance, opt.max_denominator);
  if (!re || !im) return std::nullopt;
  return Scalar(*re, *im);
}

Scalar canonical_scale(std::span<const Scalar> xs) {
  const Scalar* first = nullptr;
  for (const auto& x : xs)
    if (!x.is_zero()) {
      first = &x;
      break;
    }
  if (!first) return Scalar(1);
  Scalar f = first->inverse();
  mpz_class lcm(1);
  for (const auto& x : xs) {
    if (x.is_zero()) continue;
    Scalar y = x * f;
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), y.re().get_den_mpz_t());
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), y.im().get_den_mpz_t());
  }
  mpz_class g(0);
  for (const auto& x : xs) {
    if (x.is_zero()) continue;
    Scalar y = x * f;
    mpz_class re = y.re().get_num() * (lcm / y.re().get_den());
    mpz_class im = y.im().get_num() * (lcm / y.im().get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), re.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), im.get_mpz_t());
  }
  Rational scale(lcm, g);
  scale.canonicalize();
  return f * Scalar(scale);
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid_input";
    case ErrorKind::Degenerate: return "degenerate";
    case ErrorKind::Inconsistent: return "inconsistent";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

}  // namespace rc
