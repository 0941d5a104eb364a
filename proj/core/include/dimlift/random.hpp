#pragma once

#include <cstdint>
#include <random>

#include "dimlift/rational.hpp"

namespace dimlift {

/// Seeded generator used by every randomized construction and test harness.
/// Only the raw mt19937_64 stream is consumed, never the standard
/// distributions, so draws are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform-ish integer in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

  /// Integer in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  /// p/q with 1 <= p <= max_num, 1 <= q <= max_den.
  Rational positive_rational(std::int64_t max_num = 9, std::int64_t max_den = 4) {
    return Rational(static_cast<long>(between(1, max_num)), static_cast<long>(between(1, max_den)));
  }

  /// p/q with -max_num <= p <= max_num, 1 <= q <= max_den.
  Rational rational(std::int64_t max_num = 9, std::int64_t max_den = 4) {
    return Rational(static_cast<long>(between(-max_num, max_num)), static_cast<long>(between(1, max_den)));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace dimlift
