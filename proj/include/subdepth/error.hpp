#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace subdepth {

enum class ErrorCode {
  // user errors
  OrderCapExceeded,
  InvalidPermutation,
  UnknownConstructor,
  ParameterOutOfRange,
  DegreeMismatch,
  NotASubgroup,
  NotNormal,
  GroupMismatch,
  TableMismatch,
  NotACharacter,
  NotFaithful,
  DimensionMismatch,
  DegenerateMatrix,
  ParseError,
  DegreeViolation,
  InvalidInput,
  // internal failures: a theorem or consistency check did not hold
  PrimeSearchFailed,
  LiftInconsistent,
  CapExceeded,
  TheoremViolation,
};

std::string_view to_string(ErrorCode code);

/// True for codes that signal a bug in this library rather than bad input.
bool is_internal(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace subdepth
