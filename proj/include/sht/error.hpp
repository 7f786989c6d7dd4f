#pragma once

#include <stdexcept>
#include <string>

namespace sht {

enum class ErrorCode {
  InvalidInput,
  CompositionNonzero,
  CutoffTooSmall,
  OutOfRange,
  DSquaredNonzero,
  CutoffExceeded,
  NotComplete,
  NotSimplyConnected,
  DegreeCutoff,
  CutoffMismatch,
  SimplicialIdentityViolation,
  NotACdga,
  DimensionMismatch,
  Schema,
  Io,
};

/// Upper-case identifier used in reports, e.g. "COMPOSITION_NONZERO".
const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sht
