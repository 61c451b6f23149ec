#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polymat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed ideal or monomial text. `position` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An operation was called outside its domain (mixed variable counts,
/// invalid parameters, exponent overflow, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Predicates that need at least one generator reject the zero ideal with this.
class ZeroIdealError : public DomainError {
 public:
  ZeroIdealError() : DomainError("operation is undefined for the zero ideal") {}
};

/// A configured size budget was exceeded. Never a partial answer.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A computation contradicted a proven statement. Indicates a bug.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace polymat
