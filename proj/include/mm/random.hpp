#pragma once

#include <cstdint>
#include <span>

#include "mm/polynomial.hpp"

namespace mm {

/// SplitMix64 (Steele, Lea, Flood). Fixed so runs replay across builds.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t limit = -bound % bound;  // 2^64 mod bound
    for (;;) {
      std::uint64_t r = next();
      if (r >= limit) return r % bound;
    }
  }

 private:
  std::uint64_t state_;
};

/// Mixes a base seed with two stream indices into an independent seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) noexcept;

/// Sum c_i g_i over the generators of weighted degree `degree`, with each
/// c_i uniform in GF(p) \ {0}. Pure function of (gens, degree, seed).
/// Throws kStratum when no generator has that degree.
Polynomial random_homogeneous_combo(std::span<const Polynomial> gens, int degree, std::uint64_t seed);

}  // namespace mm
