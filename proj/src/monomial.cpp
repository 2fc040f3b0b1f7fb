#include "mm/monomial.hpp"

#include <algorithm>

#include "mm/error.hpp"

namespace mm {

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    int e = int{a.exp[i]} + int{b.exp[i]};
    if (e > kMaxExponent) throw Error(ErrorCode::kComputationLimit, "exponent overflow");
    r.exp[i] = static_cast<std::uint16_t>(e);
  }
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint16_t>(a.exp[i] - b.exp[i]);
  return r;
}

bool divides(const Monomial& a, const Monomial& b) noexcept {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (a.exp[i] > b.exp[i]) return false;
  }
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) noexcept {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = std::max(a.exp[i], b.exp[i]);
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) noexcept {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = std::min(a.exp[i], b.exp[i]);
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) noexcept {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (a.exp[i] != 0 && b.exp[i] != 0) return false;
  }
  return true;
}

int weighted_degree(const Monomial& m, std::span<const int> weights) noexcept {
  int d = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) d += weights[i] * m.exp[i];
  return d;
}

bool canonical_less(const Monomial& a, const Monomial& b) noexcept {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  return a.exp > b.exp;
}

namespace {

// Reverse-lex tie break on [lo, hi): the monomial with the smaller exponent in
// the last differing variable is larger.
std::strong_ordering revlex(const Monomial& a, const Monomial& b, int lo, int hi) noexcept {
  for (int i = hi - 1; i >= lo; --i) {
    if (a.exp[i] != b.exp[i]) {
      return a.exp[i] < b.exp[i] ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

std::strong_ordering lexcmp(const Monomial& a, const Monomial& b, int lo, int hi) noexcept {
  for (int i = lo; i < hi; ++i) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] <=> b.exp[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering grevlex(std::span<const int> w, const Monomial& a, const Monomial& b, int lo,
                             int hi) noexcept {
  int da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += w[i] * a.exp[i];
    db += w[i] * b.exp[i];
  }
  if (da != db) return da <=> db;
  return revlex(a, b, lo, hi);
}

}  // namespace

std::strong_ordering compare(const MonomialOrder& order, std::span<const int> weights, const Monomial& a,
                             const Monomial& b) noexcept {
  const int n = static_cast<int>(weights.size());
  switch (order.kind) {
    case OrderKind::kGrevlex:
      return grevlex(weights, a, b, 0, n);
    case OrderKind::kLex:
      return lexcmp(a, b, 0, n);
    case OrderKind::kElimination: {
      int da = 0, db = 0;
      for (int i = 0; i < order.block; ++i) {
        da += a.exp[i];
        db += b.exp[i];
      }
      if (da != db) return da <=> db;
      if (auto c = revlex(a, b, 0, order.block); c != 0) return c;
      return order.tail == OrderKind::kLex ? lexcmp(a, b, order.block, n)
                                           : grevlex(weights, a, b, order.block, n);
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace mm
