#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace latticeturb {

// Counter-based generator built on the SplitMix64 finalizer
// (Steele, Lea & Flood 2014). Draw i of stream s under seed k is
//
//   mix(k ^ mix(s + 1) + (i + 1) * 0x9E3779B97F4A7C15)
//
// so every draw is addressable without replaying earlier ones, and the
// same (seed, stream, index) gives the same 64 bits on every platform.
class CounterRng {
 public:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

  constexpr CounterRng(std::uint64_t seed, std::uint64_t stream = 0) noexcept
      : key_(seed ^ mix(stream + 1)) {}

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  constexpr std::uint64_t bits(std::uint64_t index) const noexcept {
    return mix(key_ + (index + 1) * kGolden);
  }

  /// Uniform on [0, 1) with 53 random mantissa bits.
  constexpr double uniform(std::uint64_t index) const noexcept {
    return static_cast<double>(bits(index) >> 11) * 0x1.0p-53;
  }

  /// Sequential interface over the same counter space.
  double next_uniform() noexcept { return uniform(counter_++); }

  /// Standard normal via Box-Muller on two consecutive draws.
  double next_normal() noexcept {
    const double u1 = 1.0 - next_uniform();  // (0, 1]
    const double u2 = next_uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Named streams so that independent consumers of one seed never overlap.
enum class RngStream : std::uint64_t {
  kDisorder = 1,
  kPhases = 2,
  kAmplitudes = 3,
  kTest = 99,
};

inline CounterRng make_rng(std::uint64_t seed, RngStream stream) noexcept {
  return CounterRng(seed, static_cast<std::uint64_t>(stream));
}

}  // namespace latticeturb
