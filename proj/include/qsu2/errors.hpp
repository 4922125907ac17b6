#pragma once

#include <stdexcept>

namespace qsu2 {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A q-number or Casimir value has no finite limit at the requested q point.
struct DivergentError : Error {
    using Error::Error;
};

/// Least-squares fit matrix is numerically singular (sample points too clustered).
struct IllConditionedError : Error {
    using Error::Error;
};

/// Representation dimension exceeds the guard for dense-matrix suites.
struct DimensionTooLargeError : Error {
    using Error::Error;
};

/// A weight-space kernel is not one-dimensional, or a lowering tower collapses
/// early; both signal q at a degenerate root of unity.
struct KernelDimensionMismatchError : Error {
    using Error::Error;
};

/// Exchange symmetry is only defined on identical tensor factors.
struct NotIdenticalFactorsError : Error {
    using Error::Error;
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

/// The intertwiner nullspace is empty at tolerance.
struct NoIntertwinerError : Error {
    using Error::Error;
};

}  // namespace qsu2
