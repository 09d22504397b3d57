#pragma once

#include <cstdint>

namespace olp {

/// SplitMix64 mixing function.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

/// Derive a decorrelated child seed; split(seed, i) and split(seed, k) for
/// i != k give independent streams, so per-path and per-decision streams can
/// be carved deterministically out of one base seed regardless of how many
/// workers run.
constexpr std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index) {
  return mix64(seed + 0x9E3779B97F4A7C15ULL * (index + 1));
}

/// Counter-based SplitMix64 stream. Cheap to construct, no warm-up.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

}  // namespace olp
