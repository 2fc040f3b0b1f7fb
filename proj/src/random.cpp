#include "mm/random.hpp"

#include "mm/error.hpp"

namespace mm {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) noexcept {
  SplitMix64 g(seed ^ (a * 0xd1b54a32d192ed03ull) ^ (b * 0x8cb92ba72f3d8dd7ull));
  g.next();
  return g.next();
}

Polynomial random_homogeneous_combo(std::span<const Polynomial> gens, int degree, std::uint64_t seed) {
  if (gens.empty()) throw Error(ErrorCode::kStratum, "no generators supplied");
  const RingPtr& ring = gens.front().ring();
  const std::uint32_t p = ring->field().characteristic();
  SplitMix64 rng(seed);
  Polynomial acc(ring);
  bool any = false;
  for (const auto& g : gens) {
    require_same_ring(ring, g.ring());
    if (g.is_zero() || !g.is_homogeneous() || g.degree() != degree) continue;
    Coeff c = static_cast<Coeff>(1 + rng.below(p - 1));
    acc = acc + g.scaled(c);
    any = true;
  }
  if (!any) throw Error(ErrorCode::kStratum, "no generators of degree " + std::to_string(degree));
  return acc;
}

}  // namespace mm
