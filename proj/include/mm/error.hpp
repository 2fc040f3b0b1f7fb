#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mm {

enum class ErrorCode {
  kInput,             // arity/context mismatch, malformed arguments
  kSyntax,            // polynomial or problem-file syntax
  kHomogeneity,
  kJNotMPrimary,
  kINilpotent,
  kStratum,           // no generators in the requested degree
  kComputationLimit,  // Groebner resource caps
  kPrecondition,
  kStabilization,
  kSearchFailure,
  kInternalInconsistency,
  kInvariantViolation,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the problem-file and polynomial parsers; carries a 1-based position.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, int line, int column)
      : Error(ErrorCode::kSyntax, what + " (line " + std::to_string(line) + ", column " +
                                      std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace mm
