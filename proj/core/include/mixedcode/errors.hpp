#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mixedcode {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands built over different alphabet splits, rings or lengths.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Malformed text input. line() is 1-based, 0 when not tied to a file line.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Semantically invalid input (for instance an even cyclic length).
class InputError : public Error {
public:
    using Error::Error;
};

/// A computation would exceed its configured enumeration budget.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, double required_log2)
        : Error(what), required_log2_(required_log2) {}
    /// log2 of the size the operation would have needed.
    double required_log2() const noexcept { return required_log2_; }

private:
    double required_log2_;
};

/// Polynomial division by a divisor whose leading coefficient is not a unit.
class IndeterminateDivision : public Error {
public:
    using Error::Error;
};

/// An assembled parity-check matrix is not orthogonal to its generator matrix.
class ConstructionMismatch : public Error {
public:
    ConstructionMismatch(const std::string& what, std::size_t g_row, std::size_t h_row, unsigned value)
        : Error(what), g_row_(g_row), h_row_(h_row), value_(value) {}
    std::size_t g_row() const noexcept { return g_row_; }
    std::size_t h_row() const noexcept { return h_row_; }
    unsigned inner_product() const noexcept { return value_; }

private:
    std::size_t g_row_, h_row_;
    unsigned value_;
};

/// Cyclic generator polynomials that fail a structural condition.
class ValidationError : public Error {
public:
    using Error::Error;
};

} // namespace mixedcode
