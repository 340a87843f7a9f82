#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ord3 {

// Base of every exception thrown by the core. The C API maps the concrete
// type onto an ord3_status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Input violates an operation's precondition (bad invariants, wrong alphabet).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Numeric argument outside the domain of a formula.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace ord3
