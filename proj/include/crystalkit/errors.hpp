#pragma once

#include <stdexcept>
#include <string>

namespace ck {

// Exit-code families used by the CLI: 2 invalid input, 3 cap exceeded,
// 4 internal cross-validation failure.
enum class ErrorKind { InvalidInput, CapExceeded, Internal };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

class InvalidInputError : public Error {
public:
  explicit InvalidInputError(const std::string& msg)
      : Error(ErrorKind::InvalidInput, msg) {}
};

class CapExceededError : public Error {
public:
  explicit CapExceededError(const std::string& msg)
      : Error(ErrorKind::CapExceeded, msg) {}
};

// Raised when two independent computations of the same quantity disagree.
// Signals an implementation bug, never a property of the input.
class CrossValidationError : public Error {
public:
  explicit CrossValidationError(const std::string& msg)
      : Error(ErrorKind::Internal, msg) {}
};

}  // namespace ck
