#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mm/error.hpp"
#include "mm/local_model.hpp"

namespace mm {

/// A, an m-primary J and the family I_1..I_s. Validated on construction.
class ProblemInstance {
 public:
  ProblemInstance(LocalRingModel A, Ideal J, std::vector<Ideal> ideals);

  const LocalRingModel& model() const noexcept { return *A_; }
  const RingPtr& ring() const noexcept { return A_->ring(); }
  const Ideal& J() const noexcept { return J_; }
  const std::vector<Ideal>& ideals() const noexcept { return ideals_; }
  int s() const noexcept { return static_cast<int>(ideals_.size()); }
  /// I = I_1 ... I_s.
  const Ideal& product() const noexcept { return product_; }
  /// gamma : I^inf.
  const Ideal& saturation() const noexcept { return saturation_; }
  int ell() const noexcept { return ell_; }
  const LengthCalculator& lengths() const noexcept { return *lengths_; }

  /// Largest total degree of a generator of J or of some I_i.
  int max_generator_degree() const;
  int default_base0() const { return 2 * max_generator_degree() + 2; }

  /// Same instance with I_i and I_j exchanged.
  ProblemInstance swapped(int i, int j) const;

 private:
  std::shared_ptr<const LocalRingModel> A_;
  Ideal J_;
  std::vector<Ideal> ideals_;
  Ideal product_;
  Ideal saturation_;
  int ell_ = 0;
  std::shared_ptr<const LengthCalculator> lengths_;
};

/// l(J^{n0} I^n / J^{n0+1} I^n) with I^n = I_1^{n_1} ... I_s^{n_s}.
std::int64_t hilbert_value(const ProblemInstance& P, std::span<const int> n, Path path = Path::kAuto);

enum class Execution { kSerial, kParallel };

/// Values on {base..base+window}^{s+1}, row-major with n_0 most significant.
std::vector<std::int64_t> evaluate_grid(const ProblemInstance& P, int base, int window, Path path = Path::kAuto,
                                        Execution ex = Execution::kParallel);

struct HilbertTable {
  int dims = 0;  // s + 1
  int base = 0;  // same on every axis
  int window = 0;
  std::vector<std::int64_t> values;
  int ell = 0;
  bool stabilized = false;

  std::size_t index(std::span<const int> offset) const;
  std::int64_t at(std::span<const int> offset) const { return values[index(offset)]; }
  /// Mixed forward difference of multi-order k at grid offset p.
  std::int64_t difference(std::span<const int> k, std::span<const int> p) const;
};

/// All order-ell differences inside the grid vanish and the order-(ell-1)
/// differences at offset 0 and offset (1,..,1) agree.
bool passes_stabilization(const HilbertTable& T);

/// Largest |k| with a nonzero difference at the base point; -1 if H vanishes there.
int difference_degree(const HilbertTable& T);

class StabilizationFailure : public Error {
 public:
  StabilizationFailure(std::string what, HilbertTable last)
      : Error(ErrorCode::kStabilization, std::move(what)), table_(std::move(last)) {}
  const HilbertTable& table() const noexcept { return table_; }

 private:
  HilbertTable table_;
};

struct TableOptions {
  std::optional<int> base0;   // default: P.default_base0()
  std::optional<int> window;  // default: ell + 1
  int base_cap = 32;
  Path path = Path::kAuto;
  Execution execution = Execution::kParallel;
};

/// Evaluates the grid, doubling the base until the table stabilizes.
HilbertTable build_table(const ProblemInstance& P, const TableOptions& options = {});

/// Multi-indices of total degree `total` with `dims` entries, lexicographically descending.
std::vector<std::vector<int>> mixed_types(int dims, int total);
std::string type_label(std::span<const int> k);
/// Parses "k0,k1,..", optionally parenthesized.
std::vector<int> parse_type(std::string_view text);

enum class Route { kDirectTable, kFcReduction, kClosedForm };
const char* route_name(Route r);

struct MixedReport {
  int ell = 0;
  std::vector<std::pair<std::vector<int>, std::int64_t>> entries;  // types in mixed_types order
  Route route = Route::kDirectTable;
  int base = 0;
  int window = 0;

  std::int64_t value(std::span<const int> k) const;
};

/// e(k) = Delta^k H at the base point for every k with |k| = ell - 1.
MixedReport mixed_multiplicities(const HilbertTable& T);

/// Polynomial extension R = A[X] with t_i variables of degree e_i over A.
struct FreeAlgebraSpec {
  LocalRingModel A;
  Ideal J;
  std::vector<int> t;
};

/// Dimension predicted for the free extension: d + sum (t_i - 1), or 0 once
/// some direction has no variables.
int free_algebra_dimension(int d, std::span<const int> t);

struct FreeAlgebraResult {
  MixedReport report;
  HilbertTable table;
};

/// H(n0; n) = l(J^{n0}/J^{n0+1}) prod C(n_i + t_i - 1, t_i - 1), with the
/// dimension read off the differences and compared with the prediction.
FreeAlgebraResult free_algebra_report(const FreeAlgebraSpec& F, const TableOptions& options = {});

struct FreeQuotientStep {
  int direction;  // 1-based
  std::vector<int> t;
  int dim;
  bool unit_drop;
};

/// Quotients the free extension by one variable from each listed direction
/// in turn, recording the dimension after every step. Non-unit drops are
/// recorded, not rejected.
std::vector<FreeQuotientStep> free_algebra_sequence(const FreeAlgebraSpec& F, std::span<const int> directions,
                                                    const TableOptions& options = {});

}  // namespace mm
