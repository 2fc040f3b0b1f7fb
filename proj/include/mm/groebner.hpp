#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mm/polynomial.hpp"

namespace mm {

/// Per-run resource caps. Exceeding either aborts with kComputationLimit.
struct GbLimits {
  std::size_t max_pairs = 50'000;
  int max_degree = 200;
};

/// Reduced Groebner basis: monic leads, pairwise reduced, sorted by
/// increasing leading monomial. The order is the ring's order.
class GroebnerBasis {
 public:
  explicit GroebnerBasis(RingPtr ring) : ring_(std::move(ring)) {}
  /// Trusts that `elements` already form a reduced basis in canonical order.
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements)
      : ring_(std::move(ring)), elements_(std::move(elements)) {}

  const RingPtr& ring() const noexcept { return ring_; }
  const MonomialOrder& order() const noexcept { return ring_->order(); }
  const std::vector<Polynomial>& elements() const noexcept { return elements_; }
  bool is_zero_ideal() const noexcept { return elements_.empty(); }
  bool is_unit_ideal() const noexcept { return elements_.size() == 1 && elements_[0].is_constant(); }
  std::vector<Monomial> lead_monomials() const;

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return same_ring(a.ring_, b.ring_) && a.elements_ == b.elements_;
  }

 private:
  RingPtr ring_;
  std::vector<Polynomial> elements_;
};

/// Remainder of f under full multivariate division by G. Zero iff f is in
/// the ideal generated by G.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);

/// Reduced Groebner basis of the ideal generated by `gens` under the ring's
/// order. Applies the coprime-lead and chain criteria (Gebauer-Moeller).
GroebnerBasis buchberger(std::span<const Polynomial> gens, const RingPtr& ring, const GbLimits& limits = {});
/// Same, under an explicit order (the generators are re-sorted into a ring
/// carrying that order).
GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order,
                         const GbLimits& limits = {});

/// Checks Buchberger's criterion directly: every S-polynomial of the basis
/// reduces to zero. Used by tests.
bool satisfies_buchberger_criterion(const GroebnerBasis& G);

}  // namespace mm
