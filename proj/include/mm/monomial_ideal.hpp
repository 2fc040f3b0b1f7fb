#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mm/monomial.hpp"

namespace mm {

/// Monomial ideal held by its unique minimal generating set (sorted by
/// canonical_less). No generators is the zero ideal; {1} is the unit ideal.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(int nvars) : nvars_(nvars) {}
  /// Minimalizes `gens`.
  MonomialIdeal(int nvars, std::vector<Monomial> gens);
  static MonomialIdeal unit(int nvars) { return MonomialIdeal(nvars, {Monomial{}}); }

  int nvars() const noexcept { return nvars_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_[0].is_one(); }
  int max_generator_degree(std::span<const int> weights) const noexcept;
  int min_generator_degree(std::span<const int> weights) const noexcept;

  bool contains(const Monomial& m) const noexcept;
  bool contains(const MonomialIdeal& other) const noexcept;

  MonomialIdeal operator+(const MonomialIdeal& b) const;
  MonomialIdeal operator*(const MonomialIdeal& b) const;
  MonomialIdeal power(int n) const;
  MonomialIdeal intersect(const MonomialIdeal& b) const;
  MonomialIdeal colon(const Monomial& m) const;
  MonomialIdeal colon(const MonomialIdeal& b) const;
  /// a : b^inf, via a : g^inf = (generators with the support of g erased),
  /// intersected over the generators g of b.
  MonomialIdeal saturate(const MonomialIdeal& b) const;

  /// Krull dimension of k[x]/a: the largest set of variables that contains
  /// the support of no generator. -1 for the unit ideal.
  int krull_dim() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  int nvars_;
  std::vector<Monomial> gens_;
};

/// Minimal elements of `candidates` under divisibility, canonical order.
std::vector<Monomial> minimalize(int nvars, std::vector<Monomial> candidates);

/// Height-function view of a monomial ideal. One variable is singled out as
/// the height axis; for every exponent cell of the remaining variables the
/// table stores the least height exponent that lands in the ideal.
/// Outside the bounding box the table extends constantly.
class Staircase {
 public:
  static constexpr std::uint32_t kInfinite = 0xffffffffu;
  static constexpr std::size_t kMaxCells = std::size_t{1} << 22;

  /// Uses the smallest box covering `gens` and every monomial in `cover`.
  Staircase(int nvars, std::span<const Monomial> gens, std::span<const Monomial> cover = {});

  /// Whether a table of that geometry fits under kMaxCells.
  static bool fits(int nvars, std::span<const Monomial> gens, std::span<const Monomial> cover = {});

  bool contains(const Monomial& m) const noexcept;
  std::vector<Monomial> minimal_generators() const;

  /// Number of monomials in `outer` but not in `inner` (inner must be a
  /// subset of outer). Throws kPrecondition when that set is infinite.
  static std::int64_t difference_count(const MonomialIdeal& outer, const MonomialIdeal& inner);

 private:
  Staircase() = default;
  void build(std::span<const Monomial> gens);
  std::size_t cell_of(const Monomial& m) const noexcept;

  int nvars_ = 0;
  int height_ = 0;
  std::vector<int> axes_;         // non-height variables
  std::vector<int> extent_;       // box size per axis
  std::vector<std::size_t> stride_;
  std::vector<std::uint32_t> table_;
};

/// Hilbert series numerator N(t) of k[x]/M under `weights`, i.e.
/// HS(t) = N(t) / prod_i (1 - t^{w_i}). Computed by pivot splitting:
/// N(M) = N(M + (p)) + t^{deg p} N(M : p).
std::vector<std::int64_t> hilbert_numerator(const MonomialIdeal& M, std::span<const int> weights);

/// dim_k (k[x]/M)_e for e = 0..max_degree.
std::vector<std::int64_t> quotient_hilbert_function(const MonomialIdeal& M, std::span<const int> weights,
                                                    int max_degree);

/// Number of monomials of weighted degree e for e = 0..max_degree.
std::vector<std::int64_t> monomial_counts(std::span<const int> weights, int max_degree);

}  // namespace mm
