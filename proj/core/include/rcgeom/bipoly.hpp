#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rcgeom/scalar.hpp"
#include "rcgeom/unipoly.hpp"

namespace rc {

/// Sparse bivariate polynomial in (u, v) over Q(i). Keys are
/// (deg_u, deg_v); zero coefficients are never stored.
class BiPoly {
 public:
  using Key = std::pair<int, int>;

  BiPoly() = default;
  BiPoly(Scalar c);  // NOLINT(google-explicit-constructor)
  BiPoly(int c) : BiPoly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)

  static BiPoly u();
  static BiPoly v();
  static BiPoly monomial(Scalar c, int du, int dv);
  /// f(u) as a polynomial in u only.
  static BiPoly from_u(const UniPoly& f);
  /// f(v) as a polynomial in v only.
  static BiPoly from_v(const UniPoly& f);
  /// Σ_k c_k(v) u^k.
  static BiPoly from_u_coeffs(const std::vector<UniPoly>& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const std::map<Key, Scalar>& terms() const { return terms_; }
  Scalar coeff(int du, int dv) const;
  void add_term(int du, int dv, const Scalar& c);

  int degree_u() const;  // -1 for zero
  int degree_v() const;
  int total_degree() const;

  /// Coefficients as polynomials in v, indexed by the power of u.
  std::vector<UniPoly> u_coeffs() const;
  /// Coefficients as polynomials in u, indexed by the power of v.
  std::vector<UniPoly> v_coeffs() const;

  UniPoly eval_u(const Scalar& u0) const;  // polynomial in v
  UniPoly eval_v(const Scalar& v0) const;  // polynomial in u
  Scalar eval(const Scalar& u0, const Scalar& v0) const;
  std::complex<double> eval(std::complex<double> u0, std::complex<double> v0) const;

  BiPoly swapped() const;
  BiPoly derivative_u() const;
  BiPoly derivative_v() const;
  /// Scaled to primitive Gaussian-integer coefficients (leading term in
  /// lexicographic order positive).
  BiPoly canonical() const;
  BiPoly conj() const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const Scalar& c);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const Scalar& c) { return a *= c; }
  friend BiPoly operator*(const Scalar& c, BiPoly a) { return a *= c; }
  friend BiPoly operator*(BiPoly a, int c) { return a *= Scalar(c); }
  friend BiPoly operator*(int c, BiPoly a) { return a *= Scalar(c); }
  BiPoly operator-() const;
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::map<Key, Scalar> terms_;
};

BiPoly pow(const BiPoly& f, int e);

/// gcd up to a scalar, returned in canonical form; gcd(0, 0) = 0.
/// Primitive pseudo-remainder sequence in u over K[v].
BiPoly bipoly_gcd(const BiPoly& f, const BiPoly& g);

/// f / g when g divides f exactly; throws Internal otherwise.
BiPoly bipoly_exact_div(const BiPoly& f, const BiPoly& g);
bool bipoly_divides(const BiPoly& g, const BiPoly& f);

}  // namespace rc
