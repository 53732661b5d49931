#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace grcodes {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Seed for the index-th independent stream derived from a user seed.
inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ index);
}

/// Uniform integer in [0, n) by rejection. Unlike std distributions the
/// sequence is the same on every standard library.
inline std::uint64_t uniform_below(std::mt19937_64 &rng, std::uint64_t n) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % n;
  std::uint64_t x;
  do
    x = rng();
  while (x >= limit);
  return x % n;
}

} // namespace grcodes
