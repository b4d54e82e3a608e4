#pragma once

// SplitMix64 (Steele, Lea, Flood 2014): 64-bit state, increment
// 0x9E3779B97F4A7C15, output mix with the Stafford "Mix13" constants.
// Uniform integers use rejection sampling, so sequences are identical on
// every platform.

#include <cstdint>

#include "flagtke/rational.hpp"

namespace flagtke {

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  /// Independent stream for item `index` of a run seeded with `seed`.
  static SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(mix64(seed ^ mix64(index + 0x9E3779B97F4A7C15ULL)));
  }

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
  }

  /// Uniform on [lo, hi], inclusive.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do x = next();
    while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

  /// num/den with num, den uniform on [1, 100].
  Rational positive_rational() {
    auto num = uniform(1, 100);
    auto den = uniform(1, 100);
    return Rational(num, den);
  }

  /// +-num/den with num uniform on [0, 100], den on [1, 100], sign fair.
  Rational signed_rational() {
    auto num = uniform(0, 100);
    auto den = uniform(1, 100);
    Rational r(num, den);
    return uniform(0, 1) ? Rational(-r) : r;
  }

 private:
  std::uint64_t state_;
};

}  // namespace flagtke
