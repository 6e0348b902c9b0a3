#pragma once

#include <stdexcept>
#include <string>

namespace algdesign {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands with different numbers of variables, or a malformed matrix shape.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A file could not be opened or read.
class IoError : public Error {
public:
    using Error::Error;
};

/// Malformed polynomial, monomial, order or design text.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Leading term requested for the zero polynomial.
class ZeroPolynomialError : public Error {
public:
    using Error::Error;
};

/// The quotient ring is infinite dimensional.
class NotZeroDimensionalError : public Error {
public:
    using Error::Error;
};

/// Generators with no common zero.
class EmptyDesignError : public Error {
public:
    using Error::Error;
};

/// Design points are not pairwise distinct.
class DuplicatePointError : public Error {
public:
    using Error::Error;
};

/// The operation is defined only for a narrower class of inputs.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

/// Invalid argument combination (fraction not inside base, wrong model size, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// An invariant that should hold by construction was violated.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace algdesign
