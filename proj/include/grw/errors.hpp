#ifndef GRW_ERRORS_HPP
#define GRW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace grw {

// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid user-supplied data: bad field parameters, reducible moduli,
// rank-deficient generators, malformed files.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class ParseError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// Ambient-space or index mismatch (wrong vector length, r out of range, ...).
class DimensionError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// Operation whose correctness requires m >= n was requested with m < n.
class UnsupportedAssumption : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class InvalidPoints : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class InvalidGenerator : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class OutOfRange : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// Planned enumeration exceeds the configured subspace budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Inverting a B-table produced a table violating a structural invariant;
// signals a corrupted input table.
class InconsistentBTable : public Error {
 public:
  using Error::Error;
};

// The moment-identity equation system does not pin down the dual table.
class Underdetermined : public Error {
 public:
  using Error::Error;
};

}  // namespace grw

#endif
