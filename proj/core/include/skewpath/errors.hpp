#pragma once

#include <stdexcept>
#include <string>

namespace skewpath {

// Operands live in different rings (rank or relation mode differ).
class ContextError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Matrix or diagram dimensions do not fit the operation.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside the documented domain of an operation.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Text input that cannot be parsed; token() names the offending piece.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::string token)
      : std::invalid_argument(message + ": '" + token + "'"),
        token_(std::move(token)) {}

  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

// An internal identity that must hold failed (e.g. a division that should be
// exact left a remainder). Always indicates a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace skewpath
