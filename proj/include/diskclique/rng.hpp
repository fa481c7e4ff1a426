#pragma once

#include <cstdint>

namespace diskclique {

// splitmix64 finalizer (Vigna). All seeded randomness in the library is
// derived from this mix so results do not depend on the standard library's
// distribution implementations.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Folds one component into a substream seed.
inline std::uint64_t seed_fold(std::uint64_t h, std::uint64_t v) {
  return mix64(h ^ (v + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2)));
}

// Counter-style generator over the splitmix64 sequence.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n) via the 128-bit multiply-high reduction.
  std::uint64_t bounded(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  int bounded_int(int n) { return static_cast<int>(bounded(static_cast<std::uint64_t>(n))); }

  // Uniform double in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// Hierarchical substream seeds: child(a).child(b) is the documented
// mix64(master, a, b, ...) schedule, so trials can be assigned stable,
// schedule-independent streams.
struct SeedSeq {
  std::uint64_t h = 0;
  SeedSeq child(std::uint64_t v) const { return SeedSeq{seed_fold(h, v)}; }
  SplitMix64 rng() const { return SplitMix64(h); }
};

}  // namespace diskclique
