#pragma once

#include <stdexcept>
#include <string>

namespace qtensor {

/// Malformed or inconsistent input files.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operation requested on a quiver shape it does not support.
struct UnsupportedShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Mismatched dimensions between values that must live on the same quiver.
struct DimensionMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Invalid argument values (zero vectors, n = 0, non-coassociative specs, ...).
struct InvalidArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A configured size or materialization bound was exceeded.
struct BoundExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed; indicates a bug or an input outside the
/// supported theory (e.g. a representation that is not a module over the
/// detected Dynkin quiver).
struct InternalConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace qtensor
