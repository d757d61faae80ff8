#pragma once

#include <stdexcept>
#include <string>

namespace arcbrick {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (wrong color, rank mismatch,
/// index out of range, non-biclosed inversion set, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Requested rank exceeds a configured enumeration cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Two independent computations disagreed, or an invariant that the
/// mathematics guarantees was violated.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace arcbrick
