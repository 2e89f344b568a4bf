#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace mpldpc {

// Finalizer from splitmix64 (Vigna). Bijective on 64-bit values.
inline std::uint64_t mix_bits(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// splitmix64. Chosen over the <random> engines because its output is pinned
// by the algorithm, not by the standard library build, which keeps
// simulation results reproducible across compilers. Gaussians use Box-Muller
// for the same reason: std::normal_distribution is implementation-defined.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53 mantissa bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound) without modulo bias.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t threshold = (~bound + 1) % bound;  // 2^64 mod bound
    for (;;) {
      std::uint64_t v = next_u64();
      if (v >= threshold) return v % bound;
    }
  }

  // Standard normal via Box-Muller, one cached mate per pair.
  double next_gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - next_double();  // (0, 1], keeps log() finite
    const double u2 = next_double();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// Independent stream for one Monte-Carlo frame. Streams depend only on
// (seed, frame_index), never on scheduling, so a frame's noise is identical
// no matter which worker draws it.
inline SplitMix64 frame_stream(std::uint64_t seed, std::uint64_t frame_index) {
  return SplitMix64(mix_bits(seed + 0x9e3779b97f4a7c15ull * (frame_index + 1)));
}

}  // namespace mpldpc
