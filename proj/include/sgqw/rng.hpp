#pragma once

#include <cstdint>
#include <random>

namespace sgqw {

/// splitmix64 step; advances `state`.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Independent generator for item `index` of a run seeded with `seed`.
inline std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t state = seed;
  std::uint64_t stream = splitmix64(state) ^ (index * 0xd1b54a32d192ed03ULL);
  return std::mt19937_64(splitmix64(stream));
}

}  // namespace sgqw
