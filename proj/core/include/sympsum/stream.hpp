#pragma once

#include <cmath>
#include <cstdint>

namespace sympsum {

/// Counter-based random stream. A draw is a pure function of
/// (seed, stream_id, counter) — splitmix64-style finalizers over the triple —
/// so the same triple yields the same value on every platform and run, and
/// parallel workers get disjoint substreams without shared state.
struct SampleStream {
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;
  std::uint64_t counter = 0;

  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

  static std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Draw at an explicit counter value, without touching state.
  static std::uint64_t at(std::uint64_t seed, std::uint64_t stream_id, std::uint64_t counter) {
    std::uint64_t z = mix64(seed + kGolden);
    z = mix64(z ^ (stream_id * 0xD1B54A32D192ED03ull + kGolden));
    return mix64(z ^ (counter * 0x94D049BB133111EBull + kGolden));
  }

  std::uint64_t next_u64() { return at(seed, stream_id, counter++); }

  /// Uniform in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  /// Standard normal via the polar method. The spare value is discarded so
  /// the draw remains a function of the counter alone.
  double next_gaussian() {
    for (;;) {
      const double u = 2.0 * next_double() - 1.0;
      const double v = 2.0 * next_double() - 1.0;
      const double s = u * u + v * v;
      if (s > 0.0 && s < 1.0) return u * std::sqrt(-2.0 * std::log(s) / s);
    }
  }

  /// Derived stream for worker/block k; disjoint from this one for k >= 0.
  SampleStream substream(std::uint64_t k) const {
    return {seed, mix64(stream_id + kGolden * (k + 1)), 0};
  }
};

}  // namespace sympsum
