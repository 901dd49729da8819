#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pjp {

enum class ErrorCode {
  UnsupportedType,
  MismatchedRootSystem,
  NotIDominant,
  NonIntegerMultiplicity,
  NotDivisible,
  SpectralCollision,
  InternalInconsistency,
  NotInvariant,
  NotWInvariant,
  SingularGram,
  InvalidInput,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace pjp
