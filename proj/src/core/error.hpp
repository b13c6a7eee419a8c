#pragma once

#include <stdexcept>
#include <string>

namespace encov {

enum class ErrorKind {
  Usage,         // bad command line
  Parse,         // malformed instance file
  Unresolved,    // reference to a block that does not exist
  Structure,     // malformed table (non-total, ragged, out of range)
  Precondition,  // operation refused: validity check or hypothesis flag failed
  CapExceeded,   // enumeration guard tripped
  Internal,      // a guaranteed invariant was violated; always a bug
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace encov
