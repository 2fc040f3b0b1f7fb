#pragma once

#include <cstdint>
#include <vector>

#include "mm/problem.hpp"

namespace mm {

struct RandomInstanceOptions {
  int min_vars = 2;
  int max_vars = 3;
  int max_s = 2;
  int max_degree = 4;
  bool allow_gamma = true;
};

/// Random all-monomial problem. Each I_i is generated in a single degree;
/// J contains a pure power of every variable. Regenerates until the
/// instance validates, so the result always loads.
ProblemFile random_monomial_problem(std::uint64_t seed, const RandomInstanceOptions& options = {});

struct DiffMismatch {
  int instance = 0;
  std::vector<int> n;
  std::int64_t staircase = 0;
  std::int64_t groebner = 0;
};

struct DiffOutcome {
  std::vector<ProblemFile> problems;
  std::size_t points = 0;
  std::vector<DiffMismatch> mismatches;
};

/// Staircase counting against Groebner-basis Hilbert functions, pointwise on
/// {base0..base0+window}^{s+1} for `count` random instances.
DiffOutcome run_difftest(int count, std::uint64_t seed, int base0, int window,
                         Execution ex = Execution::kParallel);

}  // namespace mm
