#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace catstat {

enum class ErrorKind {
  InvalidOrder,
  Domain,
  InvalidBicharacter,
  NotAHomomorphism,
  SizeMismatch,
  NotInvertible,
  WrongSpec,
  OutOfRange,
  LengthMismatch,
  Hermiticity,
  Syntax,
  ResourceGuard,
  Schema,
  Internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so front ends can map
/// input problems to exit codes without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& message);

}  // namespace catstat
