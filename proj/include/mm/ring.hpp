#pragma once

#include <compare>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "mm/monomial.hpp"
#include "mm/prime_field.hpp"

namespace mm {

class RingContext;
using RingPtr = std::shared_ptr<const RingContext>;

/// Ambient polynomial ring k[x_1..x_n] over GF(p) with positive variable
/// weights and a monomial order. Immutable; shared by every polynomial.
class RingContext {
 public:
  static RingPtr make(std::vector<std::string> names,
                      std::uint32_t p = PrimeField::kDefaultCharacteristic,
                      std::vector<int> weights = {},
                      MonomialOrder order = MonomialOrder::grevlex());

  int nvars() const noexcept { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const PrimeField& field() const noexcept { return field_; }
  std::span<const int> weights() const noexcept { return weights_; }
  int max_weight() const noexcept;
  const MonomialOrder& order() const noexcept { return order_; }
  bool unit_weights() const noexcept;

  /// Index of a variable name, or -1.
  int index_of(std::string_view name) const noexcept;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const noexcept {
    return mm::compare(order_, weights_, a, b);
  }
  int degree(const Monomial& m) const noexcept { return weighted_degree(m, weights_); }

  /// Same variables and field, different order.
  RingPtr with_order(MonomialOrder order) const;
  /// Prepends one variable `name` and uses elimination-block(1) with this
  /// ring's order as the tail order. Used for intersections.
  RingPtr with_elimination_variable(const std::string& name = "_w") const;

  Monomial variable(int i) const;
  std::string format(const Monomial& m) const;

  friend bool operator==(const RingContext&, const RingContext&) = default;

 private:
  RingContext(std::vector<std::string> names, PrimeField field, std::vector<int> weights,
              MonomialOrder order)
      : names_(std::move(names)), field_(field), weights_(std::move(weights)), order_(order) {}

  std::vector<std::string> names_;
  PrimeField field_;
  std::vector<int> weights_;
  MonomialOrder order_;
};

/// True when both pointers denote the same ring (identity or structural).
bool same_ring(const RingPtr& a, const RingPtr& b) noexcept;
void require_same_ring(const RingPtr& a, const RingPtr& b);

/// Arity-checked comparison of plain exponent vectors.
std::strong_ordering compare_exponents(const RingContext& ring, std::span<const int> a,
                                       std::span<const int> b);

Monomial make_monomial(std::span<const int> exponents);

}  // namespace mm
