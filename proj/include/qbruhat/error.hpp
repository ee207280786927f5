#pragma once

#include <stdexcept>
#include <string>

namespace qbruhat {

/// Base of all library errors that are not plain argument errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact integer arithmetic left the range of std::int64_t.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// An enumeration hit its configured size or node budget.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal mathematical invariant failed (e.g. a nonzero remainder in
/// an expansion that must be exact). Always a bug or a precondition abuse.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace qbruhat
