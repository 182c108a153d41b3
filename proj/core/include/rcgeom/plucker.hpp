#pragma once

#include <array>
#include <string>

#include "rcgeom/linalg.hpp"
#include "rcgeom/scalar.hpp"

namespace rc {

/// Index order of Plücker coordinates: p01, p02, p03, p23, p31, p12.
inline constexpr std::array<std::array<int, 2>, 6> kPluckerPairs{{{0, 1}, {0, 2}, {0, 3}, {2, 3}, {3, 1}, {1, 2}}};

/// The six 2x2 minors x_i y_j − x_j y_i of [x; y] in Plücker order.
template <class T>
std::array<T, 6> wedge(const std::array<T, 4>& x, const std::array<T, 4>& y) {
  std::array<T, 6> l;
  for (int k = 0; k < 6; ++k) {
    const auto [i, j] = kPluckerPairs[k];
    l[k] = x[i] * y[j] - x[j] * y[i];
  }
  return l;
}

/// Incidence pairing X01Y23 + X02Y31 + X03Y12 + X23Y01 + X31Y02 + X12Y03;
/// zero iff the two lines meet.
template <class T>
T plucker_pairing(const std::array<T, 6>& x, const std::array<T, 6>& y) {
  return x[0] * y[3] + x[1] * y[4] + x[2] * y[5] + x[3] * y[0] + x[4] * y[1] + x[5] * y[2];
}

/// Line in projective 3-space as six exact coordinates on the Plücker
/// quadric.
class PluckerLine {
 public:
  /// Throws InvalidInput when the coordinates violate the Plücker
  /// relation or are all zero.
  explicit PluckerLine(std::array<Scalar, 6> coords);
  /// Line through two distinct points; throws Degenerate when p ∝ q.
  static PluckerLine through(const Vec4& p, const Vec4& q);

  const std::array<Scalar, 6>& coords() const { return c_; }
  const Scalar& operator[](int k) const { return c_[k]; }
  /// Whether the point lies on the line.
  bool contains(const Vec4& x) const;
  bool same_line(const PluckerLine& o) const;
  std::string to_string() const;

 private:
  std::array<Scalar, 6> c_;
};

Scalar plucker_pairing(const PluckerLine& x, const PluckerLine& y);
/// p01 p23 + p02 p31 + p03 p12.
Scalar plucker_relation(const std::array<Scalar, 6>& c);

}  // namespace rc
