#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mlc {

enum class ErrorCode {
  kAxiomF1Violation,
  kAxiomF2Violation,
  kAxiomF3Violation,
  kInvalidParameters,
  kNotComparable,
  kSizeCapExceeded,
  kNotInvertible,
  kInternalMismatch,
  kNotDivisible,
  kNotPrime,
  kBudgetExceeded,
  kArityMismatch,
  kElementOutOfRange,
  kImproperFlat,
  kLoopyMatroid,
  kRankOutOfRange,
  kBoundaryViolation,
  kCertificationFailed,
  kNotSymmetric,
  kZeroVector,
  kNotIrreducible,
  kNotWeaklyNonnegative,
  kNoConvergence,
  kPreconditionViolated,
  kHypothesisFailed,
  kConclusionFailed,
  kRankTooSmall,
  kNonPositiveRepresentative,
  kParseError,
};

std::string_view error_code_name(ErrorCode code);

// All library failures are reported through this exception; `code()` names
// the failure class and `what()` carries the witness.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mlc
