#include "pjp/error.hpp"

namespace pjp {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnsupportedType: return "UnsupportedType";
    case ErrorCode::MismatchedRootSystem: return "MismatchedRootSystem";
    case ErrorCode::NotIDominant: return "NotIDominant";
    case ErrorCode::NonIntegerMultiplicity: return "NonIntegerMultiplicity";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::SpectralCollision: return "SpectralCollision";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::NotWInvariant: return "NotWInvariant";
    case ErrorCode::SingularGram: return "SingularGram";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code), detail_(detail) {}

}  // namespace pjp
