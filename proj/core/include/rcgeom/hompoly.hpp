#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "rcgeom/linalg.hpp"
#include "rcgeom/scalar.hpp"

namespace rc {

/// Homogeneous polynomial in x0..x3 over Q(i). Every stored monomial
/// has total degree exactly `degree()`.
class HomPoly {
 public:
  using Exponent = std::array<int, 4>;

  explicit HomPoly(int degree = 0) : degree_(degree) {}
  static HomPoly variable(int j);
  static HomPoly constant(Scalar c);
  /// The linear form Σ u_j x_j.
  static HomPoly linear(const Vec4& u);

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponent, Scalar>& terms() const { return terms_; }
  Scalar coeff(const Exponent& e) const;
  /// Adds c·x^e; throws Internal if the total degree is wrong.
  void add_term(const Exponent& e, const Scalar& c);

  Scalar eval(const Vec4& x) const;
  std::complex<double> eval(const std::array<std::complex<double>, 4>& x) const;
  HomPoly partial(int j) const;
  /// Σ_j a_j ∂/∂x_j.
  HomPoly directional(const Vec4& a) const;
  HomPoly canonical() const;

  HomPoly& operator+=(const HomPoly& o);
  HomPoly& operator-=(const HomPoly& o);
  HomPoly& operator*=(const Scalar& c);
  friend HomPoly operator+(HomPoly a, const HomPoly& b) { return a += b; }
  friend HomPoly operator-(HomPoly a, const HomPoly& b) { return a -= b; }
  friend HomPoly operator*(const HomPoly& a, const HomPoly& b);
  friend HomPoly operator*(HomPoly a, const Scalar& c) { return a *= c; }
  friend HomPoly operator*(const Scalar& c, HomPoly a) { return a *= c; }
  friend HomPoly operator*(int c, HomPoly a) { return a *= Scalar(c); }
  friend bool operator==(const HomPoly& a, const HomPoly& b) {
    return a.terms_ == b.terms_ && (a.degree_ == b.degree_ || a.terms_.empty());
  }

  std::string to_string() const;

 private:
  int degree_;
  std::map<Exponent, Scalar> terms_;
};

/// All exponent vectors of total degree d in 4 variables, in a fixed
/// (lexicographically descending) order.
std::vector<HomPoly::Exponent> monomials(int d);

/// Parses expressions such as "x0^2 - 2*x0*x1 + 3/4*x3^2".
HomPoly parse_hompoly(const std::string& text);

}  // namespace rc
