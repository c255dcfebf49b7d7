#pragma once

#include <stdexcept>
#include <string>

namespace meadow {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Syntax error; `position` is the byte offset into the input.
struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

/// Precondition violation: purity, zero polynomial, unbound variable, ...
struct DomainError : Error {
  using Error::Error;
};

}  // namespace meadow
