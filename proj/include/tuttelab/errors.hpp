#pragma once

#include <stdexcept>
#include <string>

namespace tuttelab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input map violates a rotation-system invariant.
class InvalidMap : public Error {
 public:
  using Error::Error;
};

// A size or resource cap was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Exact division that does not divide.
class DivisionError : public Error {
 public:
  using Error::Error;
};

// Arguments outside the range where an operation is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A fixed-point iteration or order-by-order solve failed.
class SolveError : public Error {
 public:
  using Error::Error;
};

}  // namespace tuttelab
