// rng.hpp
// Counter-based random stream for reproducible Monte Carlo sampling. Each
// sample index owns a substream derived from (seed, index), so draws are
// bit-identical regardless of evaluation order or parallel scheduling.

#pragma once

#include <cstdint>

namespace leggett {

namespace detail {

// SplitMix64 finalizer (Steele, Lea, Flood); bijective 64-bit mix.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace detail

class SampleStream {
 public:
  explicit SampleStream(std::uint64_t state) : state_(state) {}

  // Substream for one sample of one seeded run.
  static SampleStream for_sample(std::uint64_t seed, std::uint64_t sample_index) {
    return SampleStream(detail::mix64(seed) ^ detail::mix64(~sample_index));
  }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return detail::mix64(state_);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// Deterministic per-index reseeding, used to give each sweep row or setting
// pair its own independent stream.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return detail::mix64(detail::mix64(seed) + index);
}

}  // namespace leggett
