#pragma once

#include <stdexcept>
#include <string>

namespace acd {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid input to a builder or parser (bad degree, non-prime-power q, ...).
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap (points, enumeration size, class count) was hit.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

/// A precondition of an operation does not hold (e.g. quotient by a non-normal subgroup).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed; indicates a bug, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace acd
