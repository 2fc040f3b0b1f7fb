#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mm/mixed.hpp"

namespace mm {

/// Text form of a problem. Generator strings are kept as written.
struct ProblemFile {
  std::uint32_t p = PrimeField::kDefaultCharacteristic;
  std::vector<std::string> vars;
  std::optional<std::vector<int>> weights;
  std::vector<std::string> gamma;
  std::vector<std::string> J;
  std::vector<std::vector<std::string>> I;
  std::optional<int> base0;
  std::optional<int> window;
  std::optional<std::uint64_t> seed;
  std::optional<int> retries;

  friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

/// Line-oriented `key = value`, `#` comments, lists in brackets holding
/// bare identifiers, quoted strings, integers or nested lists.
ProblemFile parse_problem_text(std::string_view text);
std::string print_problem(const ProblemFile& pf);
ProblemFile read_problem_file(const std::string& path);

/// Positive weights making every non-monomial generator homogeneous, chosen
/// to make as many I_i as possible generated in a single degree. Ties go to
/// the smallest largest weight, then the smallest sum, then lexicographic order.
std::vector<int> choose_weights(const ProblemFile& pf);

struct LoadedProblem {
  RingPtr ring;
  ProblemInstance instance;
};

/// Builds and validates the instance (homogeneity, J m-primary, I non-nilpotent).
LoadedProblem build_instance(const ProblemFile& pf);

/// Parses comma-separated generators, e.g. "x^2, y^3".
std::vector<Polynomial> parse_generator_list(const RingPtr& ring, std::string_view text);

}  // namespace mm
