#include "mm/local_model.hpp"

#include <algorithm>

#include "mm/error.hpp"

namespace mm {

LocalRingModel::LocalRingModel(Ideal gamma) : gamma_(std::move(gamma)) {
  require_homogeneous(gamma_, "gamma");
  dim_ = krull_dim_quotient(gamma_);
  if (dim_ < 0) throw Error(ErrorCode::kPrecondition, "gamma is the unit ideal; the model ring would be zero");
}

LocalRingModel LocalRingModel::quotient(const Ideal& H) const {
  return LocalRingModel(ideal_combine(gamma_, H, CombineOp::kSum));
}

Ideal LocalRingModel::lift(const Ideal& u, Path path) const {
  if (gamma_.is_zero()) return u;
  return ideal_combine(u, gamma_, CombineOp::kSum, path);
}

bool is_m_primary(const LocalRingModel& A, const Ideal& J) {
  require_homogeneous(J, "J");
  return krull_dim_quotient(A.lift(J)) == 0;
}

LengthCalculator::LengthCalculator(LocalRingModel A, Ideal J) : A_(std::move(A)), J_(std::move(J)) {
  require_homogeneous(J_, "J");
  Ideal lifted = A_.lift(J_);
  if (krull_dim_quotient(lifted) != 0) throw Error(ErrorCode::kPrecondition, "J is not m-primary in A");
  const int n = A_.ring()->nvars();
  for (int c = 1; c <= kMaxAdicBound; ++c) {
    bool all_in = true;
    for_each_monomial(n, c, [&](const Monomial& m) {
      if (all_in && !lifted.contains(Polynomial::monomial(A_.ring(), m))) all_in = false;
    });
    if (all_in) {
      c_ = c;
      return;
    }
  }
  throw Error(ErrorCode::kPrecondition, "no power m^c with c <= 100 lies in J + gamma");
}

std::pair<int, int> LengthCalculator::degree_window(const Ideal& U) const {
  int lo = U.min_generator_degree();
  int g = std::max(U.max_generator_degree(), A_.gamma().max_generator_degree());
  return {lo, g + c_ * A_.ring()->max_weight() - 1};
}

std::int64_t LengthCalculator::length(const Ideal& U, Path path, int extra_cutoff) const {
  require_same_ring(U.ring(), A_.ring());
  require_homogeneous(U, "U");
  if (U.is_zero()) return 0;
  Ideal outer = A_.lift(U, path);
  // J(U + gamma) + gamma = JU + gamma, and the reduced basis of U + gamma is
  // a much shorter generating set than U's own generators.
  Ideal inner = outer.is_monomial() || path == Path::kMonomial
                    ? A_.lift(ideal_combine(J_, U, CombineOp::kProduct, path), path)
                    : A_.lift(ideal_combine(J_, Ideal::from_groebner(outer.groebner()), CombineOp::kProduct, path), path);
  const bool monomial = path != Path::kGroebner && outer.is_monomial() && inner.is_monomial();
  if (path == Path::kMonomial && !monomial) throw Error(ErrorCode::kInput, "monomial path requested for non-monomial data");
  if (monomial) return Staircase::difference_count(outer.monomial(), inner.monomial());

  auto [lo, hi] = degree_window(U);
  hi += extra_cutoff;
  auto weights = A_.ring()->weights();
  auto h_outer = quotient_hilbert_function(lead_term_ideal(outer, path), weights, hi);
  auto h_inner = quotient_hilbert_function(lead_term_ideal(inner, path), weights, hi);
  std::int64_t total = 0;
  for (int e = std::max(lo, 0); e <= hi; ++e) total += h_inner[e] - h_outer[e];
  return total;
}

std::int64_t length_quotient(const LocalRingModel& A, const Ideal& U, const Ideal& J, Path path) {
  return LengthCalculator(A, J).length(U, path);
}

std::int64_t colength(const LocalRingModel& A) {
  if (A.dim() != 0) throw Error(ErrorCode::kPrecondition, "colength requested for a positive-dimensional model");
  MonomialIdeal lt = lead_term_ideal(A.gamma());
  auto weights = A.ring()->weights();
  // The Hilbert series is a polynomial; its degree is at most that of the numerator.
  int top = static_cast<int>(hilbert_numerator(lt, weights).size());
  auto h = quotient_hilbert_function(lt, weights, std::max(top, 1));
  std::int64_t total = 0;
  for (auto v : h) total += v;
  return total;
}

namespace {

std::int64_t nth_difference(const std::vector<std::int64_t>& v, std::size_t at, int order) {
  // sum_k (-1)^(order-k) C(order,k) v[at+k]
  std::int64_t total = 0, binom = 1;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) binom = binom * (order - k + 1) / k;
    std::int64_t term = binom * v[at + k];
    total += (order - k) % 2 == 0 ? term : -term;
  }
  return total;
}

}  // namespace

HilbertSamuelResult hilbert_samuel(const LocalRingModel& A, const Ideal& J, const Ideal& H,
                                   const HilbertSamuelPolicy& policy) {
  require_homogeneous(H, "H");
  LocalRingModel Q = A.quotient(H);
  HilbertSamuelResult out;
  out.dim = Q.dim();
  LengthCalculator calc(Q, J);
  if (out.dim == 0) {
    out.mult = colength(Q);
    return out;
  }
  const int D = out.dim;
  std::vector<Ideal> powers{Ideal::unit(A.ring())};
  auto power = [&](int n) -> const Ideal& {
    while (static_cast<int>(powers.size()) <= n) powers.push_back(ideal_combine(powers.back(), J, CombineOp::kProduct));
    return powers[n];
  };
  for (int base = D + 2; base <= policy.max_base; base *= 2) {
    const int count = D + policy.vanishing_window;
    std::vector<std::int64_t> values;
    for (int k = 0; k < count; ++k) values.push_back(calc.length(power(base + k)));
    bool stable = true;
    for (int k = 0; k < policy.vanishing_window; ++k) {
      if (nth_difference(values, k, D) != 0) stable = false;
    }
    if (stable) {
      out.base = base;
      out.mult = nth_difference(values, 0, D - 1);
      out.values = std::move(values);
      return out;
    }
    out.values = std::move(values);
    out.base = base;
  }
  throw Error(ErrorCode::kStabilization, "Hilbert-Samuel function did not stabilize up to base " +
                                             std::to_string(policy.max_base));
}

}  // namespace mm
