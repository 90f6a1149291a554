#pragma once

#include <stdexcept>
#include <string>

namespace k3gon {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    DimensionMismatch(std::size_t expected, std::size_t got)
        : Error("dimension mismatch: expected " + std::to_string(expected) +
                ", got " + std::to_string(got)) {}
};

class ArithmeticOverflow : public Error {
public:
    explicit ArithmeticOverflow(const std::string& where)
        : Error("64-bit overflow in " + where) {}
};

class NegativeSquare : public Error {
public:
    explicit NegativeSquare(long long sq)
        : Error("class has negative square " + std::to_string(sq)) {}
};

class ZeroPolarizationSquare : public Error {
public:
    ZeroPolarizationSquare() : Error("polarization has non-positive square") {}
};

/// The query is malformed (empty range, reference class not in the positive cone).
class InvalidQuery : public Error {
public:
    using Error::Error;
};

/// The query describes an infinite set of classes.
class UnboundedQuery : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class NotMinimal : public Error {
public:
    using Error::Error;
};

/// A mathematical identity that must hold failed; always an implementation bug.
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

}  // namespace k3gon

namespace k3gon {

/// An operation was called outside its documented domain.
class PreconditionViolated : public Error {
public:
    using Error::Error;
};

}  // namespace k3gon
