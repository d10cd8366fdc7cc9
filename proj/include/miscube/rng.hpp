#pragma once
// SplitMix64: the fixed PRNG for every randomized battery. Chosen because it
// is tiny, fast, well documented, and trivially splittable into independent
// substreams, which keeps seeded runs byte-identical across platforms and
// worker counts.
//
// Substream discipline: a battery over k cases draws case i's randomness from
// substream(seed, i), never from a shared stream, so scheduling cannot change
// what any case sees.

#include <cstdint>

namespace miscube {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound) by rejection; bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

  // Independent generator for case `index` of a battery seeded with `seed`.
  static SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 g(seed ^ (0x9e3779b97f4a7c15ull * (index + 1)));
    return SplitMix64(g.next());
  }

 private:
  std::uint64_t state_;
};

}  // namespace miscube
