#pragma once

#include <cstdint>
#include <vector>

#include "mm/ideal.hpp"

namespace mm {

/// A = k[y_1..y_d]/gamma localized at m = (y_1..y_d). Only homogeneous data
/// is admitted, so every finite-length module that appears is graded and its
/// length over A equals its k-dimension.
class LocalRingModel {
 public:
  explicit LocalRingModel(Ideal gamma);
  /// Polynomial model with gamma = 0.
  static LocalRingModel regular(RingPtr ring) { return LocalRingModel(Ideal(std::move(ring))); }

  const RingPtr& ring() const noexcept { return gamma_.ring(); }
  const Ideal& gamma() const noexcept { return gamma_; }
  int dim() const noexcept { return dim_; }

  /// Model of A/H: gamma replaced by gamma + H (must stay proper).
  LocalRingModel quotient(const Ideal& H) const;
  /// u + gamma, i.e. the preimage of the image of u.
  Ideal lift(const Ideal& u, Path path = Path::kAuto) const;

 private:
  Ideal gamma_;
  int dim_;
};

bool is_m_primary(const LocalRingModel& A, const Ideal& J);

/// Finite-length queries l_A(U / J U) against a fixed m-primary J.
/// Precomputes c, the least integer with m^c contained in J + gamma.
class LengthCalculator {
 public:
  static constexpr int kMaxAdicBound = 100;

  LengthCalculator(LocalRingModel A, Ideal J);

  const LocalRingModel& model() const noexcept { return A_; }
  const Ideal& J() const noexcept { return J_; }
  int adic_bound() const noexcept { return c_; }

  /// l_A(U/JU) = sum over weighted degrees e of
  /// dim (U+gamma)_e - dim (JU+gamma)_e. The monomial route counts the
  /// staircase difference directly. `extra_cutoff` widens the degree window
  /// of the graded route (the answer must not change).
  std::int64_t length(const Ideal& U, Path path = Path::kAuto, int extra_cutoff = 0) const;

  /// Degree window [lo, hi] summed by the graded route.
  std::pair<int, int> degree_window(const Ideal& U) const;

 private:
  LocalRingModel A_;
  Ideal J_;
  int c_;
};

std::int64_t length_quotient(const LocalRingModel& A, const Ideal& U, const Ideal& J, Path path = Path::kAuto);

/// l_A(A/gamma) for a zero-dimensional model.
std::int64_t colength(const LocalRingModel& A);

struct HilbertSamuelPolicy {
  int max_base = 64;
  int vanishing_window = 3;
};

struct HilbertSamuelResult {
  int dim = 0;
  std::int64_t mult = 0;
  int base = 0;                      // certified base point (0 when dim == 0)
  std::vector<std::int64_t> values;  // l((J^n + H)/(J^{n+1} + H)) for n = base, base+1, ...
};

/// Dimension and Hilbert-Samuel multiplicity e(J, A/H).
HilbertSamuelResult hilbert_samuel(const LocalRingModel& A, const Ideal& J, const Ideal& H,
                                   const HilbertSamuelPolicy& policy = {});

/// Calls fn on every monomial of total (unweighted) degree d in n variables.
template <class Fn>
void for_each_monomial(int nvars, int degree, Fn&& fn) {
  Monomial m;
  auto rec = [&](auto& self, int var, int left) -> void {
    if (var == nvars - 1) {
      m.exp[var] = static_cast<std::uint16_t>(left);
      fn(static_cast<const Monomial&>(m));
      return;
    }
    for (int e = left; e >= 0; --e) {
      m.exp[var] = static_cast<std::uint16_t>(e);
      self(self, var + 1, left - e);
    }
    m.exp[var] = 0;
  };
  rec(rec, 0, degree);
}

}  // namespace mm
