#pragma once

#include <cstdint>
#include <initializer_list>

namespace nacoh {

// SplitMix64 finalizer; a bijective 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Derives a child seed from a parent seed and a sequence of indices. Used for
// every per-triple, per-cell and per-trial stream so results do not depend on
// scheduling.
constexpr std::uint64_t derive_seed(std::uint64_t seed,
                                    std::initializer_list<std::uint64_t> path) noexcept {
  std::uint64_t h = mix64(seed);
  for (const std::uint64_t step : path) h = mix64(h ^ mix64(step + 0x632BE59BD9B4E019ULL));
  return h;
}

// Uniform double in [0, 1) from the top 53 bits.
constexpr double to_unit_interval(std::uint64_t bits) noexcept {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace nacoh
