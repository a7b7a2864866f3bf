#pragma once

#include <stdexcept>
#include <string>

namespace ttpk {

// Base of every error raised by the library. The CLI maps subclasses onto
// exit codes, so new failure modes should derive from the closest match.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input: bad magic line, unparsable header or token.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Table dimensions disagree with the declared size.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Distances break symmetry, the triangle inequality, or non-negativity.
class MetricError : public Error {
 public:
  using Error::Error;
};

// A restricted instance has a depot distance outside [1, wmax].
class RestrictedError : public Error {
 public:
  using Error::Error;
};

// Input solution or packing does not satisfy its contract.
class InvalidSolution : public Error {
 public:
  using Error::Error;
};

// An exhaustive routine was asked to run above its enumeration bound.
class CapacityExceeded : public Error {
 public:
  using Error::Error;
};

// Schedule assembly produced a table the validator rejects.
class AssemblyError : public Error {
 public:
  using Error::Error;
};

}  // namespace ttpk
