#pragma once

#include <stdexcept>
#include <string>

namespace qgain {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A quaternion constructor received a NaN or infinite component.
class NonFiniteValue : public Error {
public:
    using Error::Error;
};

/// Inversion of a quaternion whose norm is below tolerance.
class ZeroDivisor : public Error {
public:
    using Error::Error;
};

/// Matrix shapes incompatible with the requested operation.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

/// A determinant was requested for a matrix larger than the configured cap.
class SizeCapExceeded : public Error {
public:
    using Error::Error;
};

/// An enumeration (reductions, cycles) would exceed its configured budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class NotHermitian : public Error {
public:
    using Error::Error;
};

/// A value that must be real carries an imaginary residue above tolerance.
/// Signals an implementation fault, not bad input.
class NotReal : public Error {
public:
    using Error::Error;
};

/// The two Laplacian constructions disagree beyond tolerance.
class RouteMismatch : public Error {
public:
    using Error::Error;
};

class NotAWalk : public Error {
public:
    using Error::Error;
};

/// A cycle gain was requested across a zero Laplacian entry.
class ZeroEntry : public Error {
public:
    using Error::Error;
};

/// An edge gain is not a unit quaternion within tolerance.
class NonUnitGain : public Error {
public:
    using Error::Error;
};

/// A gain lies outside {±1, ±i, ±j, ±k} where those are required.
class GainsNotInLipschitzUnits : public Error {
public:
    using Error::Error;
};

/// Structural violations: self-loops, parallel edges, bad vertex references.
class InvalidGraph : public Error {
public:
    using Error::Error;
};

/// Malformed or schema-violating graph documents.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace qgain
