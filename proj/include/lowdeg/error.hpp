#pragma once

#include <stdexcept>
#include <string>

namespace lowdeg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arithmetic or linear algebra across two different fields.
class FieldMismatch : public Error {
public:
    explicit FieldMismatch(const std::string& what) : Error("field mismatch: " + what) {}
};

/// A parameter violates the documented range of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// The requested case lies outside what the implemented theory covers.
class Unsupported : public Error {
public:
    using Error::Error;
};

/// A construction could not be realized within its retry budget.
class ConstructionError : public Error {
public:
    using Error::Error;
};

/// A numerical certificate (degree, genus, regularity, identity) failed.
class VerificationError : public Error {
public:
    using Error::Error;
};

/// The ground field does not have enough rational points for a sampling request.
class FieldTooSmall : public Error {
public:
    using Error::Error;
};

/// An exponential enumeration was refused because the input exceeds its cap.
class ComplexityRefusal : public Error {
public:
    using Error::Error;
};

/// Malformed input file or descriptor.
class FormatError : public Error {
public:
    using Error::Error;
};

}  // namespace lowdeg
