#pragma once

#include <stdexcept>

namespace npt {

// Error categories mirror the C API status codes (and the CLI exit codes).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad inputs or broken preconditions.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Numerical failure: eigensolver breakdown, instability, degeneracy.
class NumericError : public Error {
 public:
  using Error::Error;
};

// File system and parse failures.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace npt
