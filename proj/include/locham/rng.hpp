#pragma once

#include <cstdint>
#include <limits>

namespace locham {

/// SplitMix64 finalizer. Used both as the generator step and to derive
/// independent substreams from (seed, index) pairs.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// SplitMix64 (Steele, Lea, Flood 2014). Chosen because its output is fully
/// specified by a few lines of integer arithmetic, so every instance and
/// sample stream is reproducible across compilers and standard libraries.
/// Derived quantities (bounded integers, doubles, signs) are computed here
/// rather than through <random> distributions, whose output is
/// implementation-defined.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  /// Stream for item `index` of a computation seeded by `seed`. Streams for
  /// different indices start at hashed, unrelated states.
  static constexpr SplitMix64 substream(std::uint64_t seed, std::uint64_t index) noexcept {
    return SplitMix64(mix64(mix64(seed) + mix64(index ^ 0x6A09E667F3BCC909ULL)));
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  constexpr result_type operator()() noexcept {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
  }

  /// Uniform integer in [0, bound) by rejection; bound must be positive.
  constexpr std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t limit = max() - (max() % bound + 1) % bound;
    for (;;) {
      const std::uint64_t r = (*this)();
      if (r <= limit) return r % bound;
    }
  }

  /// Uniform double in [0, 1) with 53 random bits.
  constexpr double uniform01() noexcept {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

  /// +1 or -1 with equal probability (top bit).
  constexpr int sign() noexcept { return ((*this)() >> 63) ? -1 : 1; }

 private:
  std::uint64_t state_;
};

}  // namespace locham
