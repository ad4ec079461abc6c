#include "idemfract/error.hpp"

namespace idemfract {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptySupport: return "EmptySupport";
    case ErrorCode::InvalidTruncation: return "InvalidTruncation";
    case ErrorCode::NotContractive: return "NotContractive";
    case ErrorCode::InvalidWeights: return "InvalidWeights";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::OracleBudgetExceeded: return "OracleBudgetExceeded";
    case ErrorCode::InvalidScale: return "InvalidScale";
    case ErrorCode::DegenerateFit: return "DegenerateFit";
    case ErrorCode::NonFiniteInput: return "NonFiniteInput";
    case ErrorCode::ConfigInvalid: return "ConfigInvalid";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

int exit_code(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ConfigInvalid:
    case ErrorCode::UnknownFamily:
    case ErrorCode::InvalidTruncation:
    case ErrorCode::InvalidWeights:
    case ErrorCode::InvalidScale:
    case ErrorCode::ShapeMismatch:
      return 2;
    case ErrorCode::NotContractive:
    case ErrorCode::EmptySupport:
    case ErrorCode::OutOfDomain:
    case ErrorCode::DegenerateFit:
    case ErrorCode::NonFiniteInput:
      return 3;
    case ErrorCode::OracleBudgetExceeded:
      return 4;
    case ErrorCode::Io:
      break;
  }
  return 1;
}

}  // namespace idemfract
