#pragma once

#include <stdexcept>
#include <string>

namespace symknot {

// Domain error cases. The CLI maps any of these to exit code 2 and prints
// the case name, so subprocess callers can script against them.
enum class ErrorKind {
  MalformedToken,
  EdgeUsedWrongNumberOfTimes,
  NotRealizable,
  BadPermutation,
  NoSuchEdge,
  MultiComponentOperand,
  MultiComponent,
  InvalidScheme,
  NotAKnot,
  ArityMismatch,
  MalformedKnotoid,
  DegenerateDiagram,
  DuplicateName,
  MalformedRow,
  ResourceLimit,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace symknot
