#pragma once

#include <stdexcept>
#include <string>

namespace untangle {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition (sizes, convexity, injectivity).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// The operation is not defined for this input (e.g. 3-connectivity of a
/// graph with fewer than four vertices).
class UndefinedInputError : public Error {
 public:
  using Error::Error;
};

/// Exhaustive search requested beyond its configured size cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Certificates are only issued for instances built by the standard builders.
class UnsupportedInstanceError : public Error {
 public:
  using Error::Error;
};

/// A game move was refused (occupied destination, unknown vertex).
class MoveRejected : public Error {
 public:
  using Error::Error;
};

/// A guarantee that should hold by construction was observed to fail.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace untangle
