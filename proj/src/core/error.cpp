#include "core/error.hpp"

namespace encov {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Usage: return "usage";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Unresolved: return "unresolved";
    case ErrorKind::Structure: return "structure";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::CapExceeded: return "cap-exceeded";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace encov
