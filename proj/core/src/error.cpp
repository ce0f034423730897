#include "massey/error.hpp"

namespace massey {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::BadPrime: return "BadPrime";
    case ErrorCode::BadGenus: return "BadGenus";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::InvalidHom: return "InvalidHom";
    case ErrorCode::NotInThirdLayer: return "NotInThirdLayer";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::BadOrder: return "BadOrder";
    case ErrorCode::NotInG3: return "NotInG3";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      detail_(message) {}

SyntaxError::SyntaxError(std::size_t offset, const std::string& message)
    : Error(ErrorCode::SyntaxError,
            message + " at offset " + std::to_string(offset)),
      offset_(offset),
      reason_(message) {}

}  // namespace massey
