#pragma once

#include <complex>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rcgeom/scalar.hpp"

namespace rc {

/// Dense univariate polynomial over Q(i), coefficients ascending by
/// degree. The zero polynomial has no coefficients and degree -1.
class UniPoly {
 public:
  static constexpr int kZeroDegree = -1;

  UniPoly() = default;
  UniPoly(Scalar c);  // NOLINT(google-explicit-constructor)
  UniPoly(int c) : UniPoly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
  explicit UniPoly(std::vector<Scalar> coeffs);
  UniPoly(std::initializer_list<Scalar> coeffs) : UniPoly(std::vector<Scalar>(coeffs)) {}

  /// The polynomial s.
  static UniPoly x() { return UniPoly({Scalar(0), Scalar(1)}); }
  static UniPoly monomial(Scalar c, int k);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_real() const;
  const std::vector<Scalar>& coeffs() const { return c_; }
  /// Coefficient of s^k (zero beyond the degree).
  Scalar coeff(int k) const;
  const Scalar& lead() const { return c_.back(); }

  Scalar eval(const Scalar& s) const;
  std::complex<double> eval(std::complex<double> s) const;
  std::complex<long double> eval(std::complex<long double> s) const;

  UniPoly derivative() const;
  UniPoly monic() const;
  /// Scaled to primitive Gaussian-integer coefficients, leading positive.
  UniPoly canonical() const;
  /// s ↦ 1/s with homogenization to `degree`: s^degree · f(1/s).
  UniPoly reversed(int degree) const;
  UniPoly conj() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Scalar& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Scalar& c) { return a *= c; }
  friend UniPoly operator*(const Scalar& c, UniPoly a) { return a *= c; }
  friend UniPoly operator*(UniPoly a, int c) { return a *= Scalar(c); }
  friend UniPoly operator*(int c, UniPoly a) { return a *= Scalar(c); }
  UniPoly operator-() const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  std::string to_string(char var = 's') const;

 private:
  void trim();
  std::vector<Scalar> c_;
};

UniPoly pow(const UniPoly& f, int e);

/// Quotient and remainder; g must be nonzero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& f, const UniPoly& g);
/// f / g, raising an Internal error when the division is not exact.
UniPoly exact_div(const UniPoly& f, const UniPoly& g);
bool divides(const UniPoly& g, const UniPoly& f);

/// Monic greatest common divisor; gcd(0, 0) = 0.
UniPoly poly_gcd(const UniPoly& f, const UniPoly& g);

/// Sylvester resultant with the sign convention res(s-a, s-b) = b - a,
/// i.e. the standard Res(g, f). Zero if either argument is zero.
Scalar resultant(const UniPoly& f, const UniPoly& g);

/// f / gcd(f, f'), monic.
UniPoly square_free_part(const UniPoly& f);

/// Yun decomposition: returns monic (g_1, g_2, ...) with f = c·Π g_i^i.
std::vector<UniPoly> square_free_decomposition(const UniPoly& f);

/// f with every irreducible factor shared with g removed (any multiplicity).
UniPoly strip_common_factors(const UniPoly& f, const UniPoly& g);

/// h with h² = c·f for some nonzero constant c, if one exists.
std::optional<UniPoly> sqrt_up_to_constant(const UniPoly& f);

/// f((a s + b)/(c s + d)) · (c s + d)^degree.
UniPoly compose_linear_fractional(const UniPoly& f, const Scalar& a, const Scalar& b, const Scalar& c,
                                  const Scalar& d, int degree);

}  // namespace rc
