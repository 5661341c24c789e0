#pragma once

#include <cstdint>

namespace netident {

// SplitMix64 finalizer; bijective on 64-bit words.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Derive an independent substream key from a base seed and a salt.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
  return mix64(mix64(seed) ^ mix64(salt + 0x632BE59BD9B4E019ULL));
}

/// Counter-based random stream: output k depends only on (seed, stream, k),
/// so parallel consumers keyed by different streams never interact.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream)
      : state_(derive_seed(seed, stream)) {}

  std::uint64_t next_u64() { return mix64(state_ += 0x9E3779B97F4A7C15ULL); }

  /// Uniform double in [0, 1).
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  bool next_bool() { return (next_u64() & 1ULL) != 0; }

 private:
  std::uint64_t state_;
};

}  // namespace netident
