#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace locbez {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text. `position` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Operands live in different rings (variable lists or coefficient fields differ).
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// An arithmetic precondition failed: zero divisor, inexact division, ord of zero, ...
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input violates a documented precondition (curve pair invariants, CLI arguments).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A Groebner computation or recursion hit a configured resource cap.
class ResourceExhausted : public Error {
 public:
  using Error::Error;
};

/// A stabilized quantity did not reach a plateau before the cap.
class NotStabilized : public Error {
 public:
  using Error::Error;
};

/// Two independent engines computed different values for the same quantity.
class EngineDisagreement : public Error {
 public:
  using Error::Error;
};

}  // namespace locbez
