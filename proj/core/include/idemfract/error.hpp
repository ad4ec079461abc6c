#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace idemfract {

enum class ErrorCode {
  EmptySupport,
  InvalidTruncation,
  NotContractive,
  InvalidWeights,
  UnknownFamily,
  OutOfDomain,
  ShapeMismatch,
  OracleBudgetExceeded,
  InvalidScale,
  DegenerateFit,
  NonFiniteInput,
  ConfigInvalid,
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Process exit status for a failure: 2 configuration, 3 numerical,
/// 4 oracle budget, 1 anything else.
int exit_code(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so the
// CLI can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace idemfract
