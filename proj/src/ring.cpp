#include "mm/ring.hpp"

#include <algorithm>
#include <set>

#include "mm/error.hpp"

namespace mm {

RingPtr RingContext::make(std::vector<std::string> names, std::uint32_t p, std::vector<int> weights,
                          MonomialOrder order) {
  if (names.empty()) throw Error(ErrorCode::kInput, "ring needs at least one variable");
  if (names.size() > kMaxVars) {
    throw Error(ErrorCode::kInput, "at most " + std::to_string(kMaxVars) + " variables are supported");
  }
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty() || !seen.insert(n).second) throw Error(ErrorCode::kInput, "duplicate or empty variable name '" + n + "'");
  }
  if (weights.empty()) weights.assign(names.size(), 1);
  if (weights.size() != names.size()) throw Error(ErrorCode::kInput, "weights must match the variable count");
  for (int w : weights) {
    if (w < 1) throw Error(ErrorCode::kInput, "variable weights must be positive");
  }
  if (order.kind == OrderKind::kElimination && (order.block < 1 || order.block >= static_cast<int>(names.size()))) {
    throw Error(ErrorCode::kInput, "elimination block out of range");
  }
  return RingPtr(new RingContext(std::move(names), PrimeField(p), std::move(weights), order));
}

int RingContext::max_weight() const noexcept { return *std::max_element(weights_.begin(), weights_.end()); }

bool RingContext::unit_weights() const noexcept {
  return std::all_of(weights_.begin(), weights_.end(), [](int w) { return w == 1; });
}

int RingContext::index_of(std::string_view name) const noexcept {
  for (int i = 0; i < nvars(); ++i) {
    if (names_[i] == name) return i;
  }
  return -1;
}

RingPtr RingContext::with_order(MonomialOrder order) const {
  return make(names_, field_.characteristic(), weights_, order);
}

RingPtr RingContext::with_elimination_variable(const std::string& name) const {
  std::vector<std::string> names{name};
  names.insert(names.end(), names_.begin(), names_.end());
  std::vector<int> weights{1};
  weights.insert(weights.end(), weights_.begin(), weights_.end());
  OrderKind tail = order_.kind == OrderKind::kLex ? OrderKind::kLex : OrderKind::kGrevlex;
  return make(std::move(names), field_.characteristic(), std::move(weights), MonomialOrder::elimination(1, tail));
}

Monomial RingContext::variable(int i) const {
  if (i < 0 || i >= nvars()) throw Error(ErrorCode::kInput, "variable index out of range");
  Monomial m;
  m.exp[i] = 1;
  return m;
}

std::string RingContext::format(const Monomial& m) const {
  std::string out;
  for (int i = 0; i < nvars(); ++i) {
    if (m.exp[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names_[i];
    if (m.exp[i] > 1) out += '^' + std::to_string(m.exp[i]);
  }
  return out.empty() ? "1" : out;
}

bool same_ring(const RingPtr& a, const RingPtr& b) noexcept { return a == b || (a && b && *a == *b); }

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw Error(ErrorCode::kInput, "operands live in different rings");
}

Monomial make_monomial(std::span<const int> exponents) {
  if (exponents.size() > kMaxVars) throw Error(ErrorCode::kInput, "too many exponents");
  Monomial m;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > kMaxExponent) throw Error(ErrorCode::kInput, "exponent out of range");
    m.exp[i] = static_cast<std::uint16_t>(exponents[i]);
  }
  return m;
}

std::strong_ordering compare_exponents(const RingContext& ring, std::span<const int> a, std::span<const int> b) {
  if (static_cast<int>(a.size()) != ring.nvars() || static_cast<int>(b.size()) != ring.nvars()) {
    throw Error(ErrorCode::kInput, "exponent vector arity does not match the ring");
  }
  return ring.compare(make_monomial(a), make_monomial(b));
}

}  // namespace mm
