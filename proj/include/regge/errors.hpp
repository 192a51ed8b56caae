#pragma once

#include <stdexcept>
#include <string>

namespace regge {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid user-supplied parameters (bad potential branch, order out of range, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// No classical circular orbit exists at the requested energy.
class NoOrbitError : public Error {
public:
    using Error::Error;
};

/// A circular orbit exists but is not stable (omega^2 <= 0).
class UnstableOrbitError : public Error {
public:
    using Error::Error;
};

/// Staged table operations were invoked out of order.
class DependencyOrderError : public Error {
public:
    using Error::Error;
};

/// An iterative solver exhausted its iteration budget.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// The radial grid cannot represent the requested state even after extension.
class GridError : public Error {
public:
    using Error::Error;
};

/// Requested value lies outside the solvable range (e.g. trajectory inversion).
class OutOfRangeError : public Error {
public:
    using Error::Error;
};

} // namespace regge
