#pragma once

#include <stdexcept>
#include <string>

namespace evenzeta {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// A division that the algebra guarantees to be exact left a remainder.
class InexactDivision : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Argument exceeds a configured enumeration or size bound.
class BoundError : public Error {
 public:
  using Error::Error;
};

/// Malformed external input (text forms, sequence files).
class InputError : public Error {
 public:
  using Error::Error;
};

/// An internal identity failed to hold.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace evenzeta
