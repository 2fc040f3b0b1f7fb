#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mm/mixed.hpp"

namespace mm {

struct FcChecks {
  bool fc1 = false;
  bool fc2 = false;
  std::optional<bool> fc3;
  bool reverified = false;  // membership, homogeneity, FC1 on the shifted grid, FC2
};

struct FCCandidate {
  Polynomial element;
  int direction = 0;  // 0 = J, i = I_i
  std::uint64_t seed = 0;
  FcChecks checks;
};

/// (x) ∩ F^n = x F^{n - e_i} modulo gamma for every n in {base..base+window}^{|F|}.
/// Requires x in family[i] + gamma.
bool check_fc1(const LocalRingModel& A, std::span<const Ideal> family, const Polynomial& x, int i, int base,
               int window);
/// (gamma : x) ⊆ (gamma : I^inf).
bool check_fc2(const LocalRingModel& A, const Ideal& I, const Polynomial& x);
/// dim ((gamma + (x)) : I^inf) = dim (gamma : I^inf) - 1. Requires x in I + gamma.
bool check_fc3(const LocalRingModel& A, const Ideal& I, const Polynomial& x);

struct FCSequenceRecord {
  std::vector<FCCandidate> elements;
  std::vector<Ideal> gammas;  // gamma of A_0, A_1, ..., one per completed step
  std::vector<int> dims;      // dim A_j/(0 : I^inf); -1 once I is nilpotent in A_j
  bool maximal = false;
  int fc_base = 0;
  int fc_window = 1;
};

class SearchFailure : public Error {
 public:
  SearchFailure(std::string what, FCSequenceRecord partial)
      : Error(ErrorCode::kSearchFailure, std::move(what)), record_(std::move(partial)) {}
  const FCSequenceRecord& record() const noexcept { return record_; }

 private:
  FCSequenceRecord record_;
};

struct SequenceOptions {
  std::uint64_t seed = 0;
  int retries = 5;
  int fc_base = 0;  // grid base for FC1; callers pass the certified table base
  int fc_window = 1;
};

/// Greedy weak-(FC) sequence with k_i elements drawn from I_i, i = 1..s.
FCSequenceRecord build_sequence(const ProblemInstance& P, std::span<const int> k, const SequenceOptions& options);

/// Checks a given sequence (x_j from I_{dirs[j]}) step by step with the same
/// FC1/FC2 tests. Unlike build_sequence it reports failures instead of retrying.
struct SequenceCheck {
  FCSequenceRecord record;
  bool weak_fc = true;
};
SequenceCheck check_sequence(const ProblemInstance& P, std::span<const Polynomial> xs, std::span<const int> dirs,
                             int fc_base, int fc_window = 1);

enum class Positivity { kPositiveCertified, kZeroCertified, kUndetermined };
const char* positivity_name(Positivity p);

struct PositivityResult {
  Positivity outcome = Positivity::kUndetermined;
  std::optional<FCSequenceRecord> witness;
  std::vector<std::uint64_t> seeds_tried;
};

/// Searches for a weak-(FC) sequence of type k whose final dimension is
/// ell - t, one attempt per seed. `e_direct` is the table value if known.
/// A witness while the table says 0 is reported as INVARIANT_VIOLATION.
PositivityResult positivity(const ProblemInstance& P, std::span<const int> k, std::span<const std::uint64_t> seeds,
                            std::optional<std::int64_t> e_direct, int fc_base, int retries = 5);

enum class VerifyStatus { kEqual, kUnequal, kZeroByPositivity, kInconclusive };
const char* verify_status_name(VerifyStatus s);

struct Theorem43Report {
  std::vector<int> type;
  int ell = 0;
  int base = 0;
  std::int64_t e_direct = 0;
  std::optional<std::int64_t> e_reduced;
  std::optional<FCSequenceRecord> sequence;
  std::optional<PositivityResult> positivity;
  bool dimension_equality = false;  // final dim == ell - t
  VerifyStatus status = VerifyStatus::kInconclusive;
  std::string note;
};

/// Compares e(k) from the table with e(J, A/((x_1..x_t) : I^inf)).
Theorem43Report verify_theorem43(const ProblemInstance& P, const HilbertTable& T, std::span<const int> k,
                                 std::uint64_t seed, int retries = 5, int positivity_seeds = 5);

}  // namespace mm
