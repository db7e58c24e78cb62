#pragma once

#include <cstdint>

namespace costbench {

// splitmix64; small, fast, and bit-stable across platforms, which the
// reproducibility contract needs (std::uniform_real_distribution is not).
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 bits of precision.
  double next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Uniform in [0, bound); bound > 0. Bias is below 2^-64 per draw.
  std::int64_t next_below(std::int64_t bound) {
    unsigned __int128 wide =
        static_cast<unsigned __int128>(next()) *
        static_cast<unsigned __int128>(static_cast<std::uint64_t>(bound));
    return static_cast<std::int64_t>(wide >> 64);
  }
};

inline std::uint64_t mix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v) {
  return mix64(h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)));
}

}  // namespace costbench
