#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace edgecache {

using Rng = std::mt19937_64;

/// splitmix64 finalizer; used to decorrelate derived seeds.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Child seed for substream `tag` of `parent`. Distinct tags give
/// statistically independent substreams.
constexpr std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t tag) noexcept {
  return mix64(mix64(parent) ^ mix64(tag + 0x632be59bd9b4e019ULL));
}

inline Rng make_rng(std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  return Rng(seq);
}

// Substream tags used by the simulator's seed hierarchy.
namespace seed_tag {
inline constexpr std::uint64_t geometry = 0x67656f;
inline constexpr std::uint64_t traffic = 0x747266;
inline constexpr std::uint64_t policy = 0x706f6c;
inline constexpr std::uint64_t placement = 0x706c63;
}  // namespace seed_tag

}  // namespace edgecache
