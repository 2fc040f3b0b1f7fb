#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mm/ring.hpp"

namespace mm {

struct Term {
  Monomial mono;
  Coeff coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over a RingContext. Terms are stored strictly
/// decreasing under the ring's order with nonzero coefficients only, so
/// equality is structural.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  /// Takes arbitrary terms; sorts, merges and drops zeros.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial monomial(RingPtr ring, const Monomial& m, Coeff c = 1);
  static Polynomial variable(RingPtr ring, int i);
  /// Wraps terms already in canonical order. No checks beyond debug asserts.
  static Polynomial from_sorted(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  bool is_constant() const noexcept { return is_zero() || (is_monomial() && terms_[0].mono.is_one()); }
  std::size_t size() const noexcept { return terms_.size(); }

  const Term& lead() const { return terms_.front(); }
  const Monomial& lead_monomial() const { return terms_.front().mono; }

  bool is_homogeneous() const noexcept;
  /// Largest weighted degree among the terms (-1 for zero).
  int degree() const noexcept;
  /// Largest unweighted total degree among the terms.
  int total_degree() const noexcept;

  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator*(const Polynomial& g) const;
  Polynomial operator-() const;
  Polynomial scaled(Coeff c) const;
  Polynomial times(const Monomial& m, Coeff c = 1) const;
  /// Leading coefficient normalized to 1 (zero stays zero).
  Polynomial monic() const;

  /// Re-expresses the polynomial in another ring with the same variables
  /// (e.g. a different order).
  Polynomial in_ring(const RingPtr& target) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
  }

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

enum class ArithOp { kAdd, kSub, kMul, kScale };

/// Dispatcher mirroring the arithmetic operators; kScale uses `scalar`.
Polynomial poly_arith(const Polynomial& f, const Polynomial& g, ArithOp op, Coeff scalar = 1);

/// Parses `3*x^2*y - y^3` style text. Integer coefficients are reduced mod p.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text, int line = 1,
                            int column_offset = 0);

/// Exact division; throws kInternalInconsistency if g does not divide f.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

/// Embeds a polynomial of `from` into `to` where `to` has `shift` extra
/// leading variables (see RingContext::with_elimination_variable).
Polynomial embed_shifted(const Polynomial& f, const RingPtr& to, int shift);
/// Inverse of embed_shifted; requires the leading `shift` exponents be zero.
Polynomial project_shifted(const Polynomial& f, const RingPtr& to, int shift);

}  // namespace mm
