#pragma once

// Seeded, platform-stable randomness helpers. mt19937_64 is bit-exact across
// implementations; the bounded draw uses masked rejection instead of
// std::uniform_int_distribution, whose output is implementation-defined.

#include <bit>
#include <cstdint>
#include <random>

namespace tiltcube::detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  std::uint64_t mask = ~0ULL >> std::countl_zero(bound - 1);
  for (;;) {
    std::uint64_t draw = rng() & mask;
    if (draw < bound) return draw;
  }
}

template <typename T>
void fisher_yates(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::uint64_t j = bounded(rng, i);
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace tiltcube::detail
