#include "catstat/error.hpp"

namespace catstat {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidOrder: return "invalid-order";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::InvalidBicharacter: return "invalid-bicharacter";
    case ErrorKind::NotAHomomorphism: return "not-a-homomorphism";
    case ErrorKind::SizeMismatch: return "size-mismatch";
    case ErrorKind::NotInvertible: return "not-invertible";
    case ErrorKind::WrongSpec: return "wrong-spec";
    case ErrorKind::OutOfRange: return "out-of-range";
    case ErrorKind::LengthMismatch: return "length-mismatch";
    case ErrorKind::Hermiticity: return "hermiticity";
    case ErrorKind::Syntax: return "syntax";
    case ErrorKind::ResourceGuard: return "resource-guard";
    case ErrorKind::Schema: return "schema";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

void raise(ErrorKind kind, const std::string& message) {
  throw Error(kind, std::string(to_string(kind)) + " error: " + message);
}

}  // namespace catstat
