#pragma once

#include <cstdint>
#include <random>

#include "rcgeom/scalar.hpp"

namespace rc {

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

/// Seeded generator for every "generic" choice. Deterministic across
/// platforms: only the raw mt19937_64 stream is used, never the
/// implementation-defined standard distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t r;
    do {
      r = engine_();
    } while (r >= limit);
    return lo + static_cast<std::int64_t>(r % span);
  }

  /// Nonzero integer in [-bound, bound].
  std::int64_t nonzero(std::int64_t bound) {
    std::int64_t v;
    do {
      v = uniform(-bound, bound);
    } while (v == 0);
    return v;
  }

  /// Rational num/den with |num| <= bound and 1 <= den <= max_den.
  Rational rational(std::int64_t bound, std::int64_t max_den = 1) {
    Rational q(static_cast<long>(uniform(-bound, bound)), static_cast<unsigned long>(uniform(1, max_den)));
    q.canonicalize();
    return q;
  }

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace rc
