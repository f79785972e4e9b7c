#pragma once

#include <stdexcept>
#include <string>

namespace octic {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Input lies outside the polynomial families this library classifies.
class OutOfScopeError : public Error {
 public:
  using Error::Error;
};

// Malformed textual input (rationals, coefficient lists, ranges).
class ParseError : public Error {
 public:
  using Error::Error;
};

// An exact identity that must hold did not; indicates a bug, not bad input.
class VerificationError : public Error {
 public:
  using Error::Error;
};

// Root approximation could not certify a factorization within the precision cap.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

}  // namespace octic
