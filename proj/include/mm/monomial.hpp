#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace mm {

inline constexpr std::size_t kMaxVars = 8;
inline constexpr int kMaxExponent = 60000;

/// Exponent vector. Only the first `nvars` slots of a ring are meaningful;
/// the rest stay zero so structural equality works across the whole array.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};

  std::uint16_t operator[](std::size_t i) const noexcept { return exp[i]; }
  std::uint16_t& operator[](std::size_t i) noexcept { return exp[i]; }

  int total_degree() const noexcept {
    int d = 0;
    for (auto e : exp) d += e;
    return d;
  }
  bool is_one() const noexcept { return total_degree() == 0; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);
/// a / b; requires divides(b, a).
Monomial operator/(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b) noexcept;
Monomial lcm(const Monomial& a, const Monomial& b) noexcept;
Monomial gcd(const Monomial& a, const Monomial& b) noexcept;
bool coprime(const Monomial& a, const Monomial& b) noexcept;
int weighted_degree(const Monomial& m, std::span<const int> weights) noexcept;

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto e : m.exp) h = (h ^ e) * 1099511628211ull;
    return static_cast<std::size_t>(h);
  }
};

/// Canonical order independent of any ring: total degree, then lexicographic.
/// Used to sort monomial generating sets deterministically.
bool canonical_less(const Monomial& a, const Monomial& b) noexcept;

enum class OrderKind { kGrevlex, kLex, kElimination };

/// A multiplicative well-order on exponent vectors.
///
/// kGrevlex compares weighted degree first, then reverse-lexicographically.
/// kElimination(k) compares the first `block` variables (unweighted degree,
/// then reverse lex) before falling back to `tail` on the remaining ones, so
/// any monomial involving an eliminated variable exceeds every monomial that
/// does not.
struct MonomialOrder {
  OrderKind kind = OrderKind::kGrevlex;
  int block = 0;
  OrderKind tail = OrderKind::kGrevlex;

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder lex() { return {OrderKind::kLex, 0, OrderKind::kLex}; }
  static MonomialOrder elimination(int k, OrderKind tail = OrderKind::kGrevlex) {
    return {OrderKind::kElimination, k, tail};
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

/// Three-way comparison of a and b under `order` on `nvars` variables with
/// the given positive weights (weights.size() == nvars).
std::strong_ordering compare(const MonomialOrder& order, std::span<const int> weights,
                             const Monomial& a, const Monomial& b) noexcept;

}  // namespace mm
