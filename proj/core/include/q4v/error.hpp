#pragma once

#include <stdexcept>
#include <string>

namespace q4v {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct ZeroDenominator : Error {
    ZeroDenominator() : Error("zero polynomial denominator") {}
};

struct PoleError : Error {
    PoleError() : Error("evaluation at a zero of the denominator") {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

struct PreconditionError : Error {
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

struct ExponentOverflow : Error {
    ExponentOverflow() : Error("monomial exponent out of 32-bit range") {}
};

}  // namespace q4v
