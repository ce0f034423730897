#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace massey {

enum class ErrorCode {
  ZeroInverse,
  DimensionMismatch,
  ModulusMismatch,
  BadPrime,
  BadGenus,
  ContextMismatch,
  SyntaxError,
  UnknownGenerator,
  InvalidHom,
  NotInThirdLayer,
  PreconditionFailed,
  NotInvariant,
  BadOrder,
  NotInG3,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to a stable report entry.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& message);

  /// Byte offset into the parsed text.
  std::size_t offset() const noexcept { return offset_; }
  /// The message without code prefix or offset.
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t offset_;
  std::string reason_;
};

}  // namespace massey
