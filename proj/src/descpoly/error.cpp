#include "descpoly/error.hpp"

namespace descpoly {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument:
      return "InvalidArgument";
    case ErrorCode::NegativeExponentResidue:
      return "NegativeExponentResidue";
    case ErrorCode::CapExceeded:
      return "CapExceeded";
    case ErrorCode::DropExceedsK:
      return "DropExceedsK";
    case ErrorCode::InvalidSequence:
      return "InvalidSequence";
  }
  return "Unknown";
}

}  // namespace descpoly
