#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mm/groebner.hpp"
#include "mm/monomial_ideal.hpp"
#include "mm/polynomial.hpp"

namespace mm {

/// Which implementation an ideal operation uses. kAuto takes the
/// combinatorial route whenever every operand is monomial.
enum class Path { kAuto, kMonomial, kGroebner };

/// Ideal given by generators. Immutable; copies share state. The reduced
/// Groebner basis under the ring order is computed at most once and may be
/// requested concurrently.
class Ideal {
 public:
  /// Zero ideal.
  explicit Ideal(RingPtr ring);
  /// Drops zero generators. If every generator is a single term the ideal
  /// is flagged monomial and keeps its minimal monomial generators.
  Ideal(RingPtr ring, std::vector<Polynomial> gens);
  Ideal(RingPtr ring, MonomialIdeal mono);

  static Ideal unit(RingPtr ring);
  /// Ideal whose generators are already its reduced basis in `gb`'s ring.
  static Ideal from_groebner(GroebnerBasis gb);

  const RingPtr& ring() const noexcept;
  const std::vector<Polynomial>& generators() const;
  bool is_monomial() const noexcept;
  const MonomialIdeal& monomial() const;
  bool is_zero() const;
  bool is_unit() const;
  bool is_homogeneous() const;

  /// Reduced Groebner basis under the ring's order.
  const GroebnerBasis& groebner() const;

  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;

  int max_generator_degree() const;
  int min_generator_degree() const;

  std::string to_string() const;

 private:
  struct State;
  explicit Ideal(std::shared_ptr<State> s) : state_(std::move(s)) {}
  std::shared_ptr<State> state_;
};

/// Same ideal (reduced Groebner bases agree).
bool same_ideal(const Ideal& a, const Ideal& b);

enum class CombineOp { kSum, kProduct };

Ideal ideal_combine(const Ideal& a, const Ideal& b, CombineOp op, Path path = Path::kAuto);
/// a^n by repeated products; a^0 is the unit ideal.
Ideal ideal_power(const Ideal& a, int n, Path path = Path::kAuto);
/// General route: Groebner basis of w*a + (1-w)*b under elimination of w.
Ideal ideal_intersect(const Ideal& a, const Ideal& b, Path path = Path::kAuto);
/// (a : b) as the intersection over generators f of b of (1/f)(a ∩ (f)).
Ideal ideal_colon(const Ideal& a, const Ideal& b, Path path = Path::kAuto);
/// a : b^inf. The general route iterates colons until the reduced bases of
/// consecutive iterates coincide.
Ideal ideal_saturate(const Ideal& a, const Ideal& b, Path path = Path::kAuto);

/// Lead-term ideal of the reduced Groebner basis (the ideal itself when
/// monomial and the path allows it).
MonomialIdeal lead_term_ideal(const Ideal& a, Path path = Path::kAuto);

/// dim_k of the weighted-degree-e piece of a homogeneous ideal.
std::int64_t graded_piece_dim(const Ideal& a, int e, Path path = Path::kAuto);

/// Krull dimension of ring/a; -1 for the unit ideal.
int krull_dim_quotient(const Ideal& a, Path path = Path::kAuto);

/// Throws kHomogeneity unless every generator is homogeneous.
void require_homogeneous(const Ideal& a, const char* what);

}  // namespace mm
