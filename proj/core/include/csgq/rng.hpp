#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace csgq {

// SplitMix64 step (Steele/Lea/Flood). Advances `state` and returns the next
// output. Used for seed expansion and stream derivation.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// xoshiro256** generator (Blackman/Vigna), state seeded via SplitMix64.
//
// All sampling (bounded integers, unit doubles, normals) is implemented on
// top of the raw 64-bit stream so that sequences are reproducible across
// platforms and standard libraries. Integer and uniform-real draws use only
// integer and IEEE arithmetic and are bit-portable; normal draws go through
// libm (log/cos) and match wherever those are correctly rounded.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t s = seed;
    for (auto& word : state_) word = splitmix64(s);
  }

  // Independent deterministic substream for (seed, index), e.g. one per
  // solver read or per benchmark task.
  static Rng stream(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = seed ^ (0x9E3779B97F4A7C15ull * (index + 1));
    return Rng(splitmix64(s));
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Unbiased draw in [0, bound) by rejection from the top of the 64-bit range.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (-bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform in [lo, hi], endpoints inclusive.
  long long uniform_int(long long lo, long long hi) {
    return lo + static_cast<long long>(
                    below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  // Uniform in [0, 1) with 53 random mantissa bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + unit() * (hi - lo); }

  // Standard Box-Muller transform; consumes two uniforms per call.
  double normal(double mean, double stddev) {
    double u1 = unit();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    const double u2 = unit();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    return mean + stddev * radius * std::cos(6.283185307179586 * u2);
  }

  bool coin() { return (next() >> 63) != 0; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_;
};

}  // namespace csgq
