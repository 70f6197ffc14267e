#pragma once

/**
 * @file rng.hpp
 * @brief SplitMix64, the project's named deterministic generator.
 *
 * Seeds must be portable across implementations, so the algorithm is pinned
 * here in full (Steele/Lea/Flood splittable-RNG output function):
 *
 *   state += 0x9E3779B97F4A7C15
 *   z = state
 *   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
 *   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
 *   output = z ^ (z >> 31)
 *
 * Bounded draws use rejection sampling (no modulo bias), so a given seed
 * yields the same tuple stream on any conforming implementation.
 */

#include <cstdint>

namespace fibsum {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform draw from the inclusive range [lo, hi].
  long long uniform(long long lo, long long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;  // hi >= lo
    if (span == 0) return static_cast<long long>(next());          // full 64-bit range
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return lo + static_cast<long long>(v % span);
  }

 private:
  std::uint64_t state_;
};

}  // namespace fibsum
