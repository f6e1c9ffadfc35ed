#pragma once

#include <stdexcept>
#include <string>

namespace halfstat {

/// Dimension or index mismatch in a matrix operation.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A matrix failed a numerical validation gate (e.g. unitarity).
struct ValidationError : std::runtime_error {
    double residual;
    ValidationError(const std::string& msg, double res)
        : std::runtime_error(msg), residual(res) {}
};

/// An operator is not invariant under particle exchange.
struct InvarianceError : std::runtime_error {
    double residual;
    InvarianceError(const std::string& msg, double res)
        : std::runtime_error(msg), residual(res) {}
};

/// Two identical fermions cannot occupy the same mode.
struct ExclusionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Circuit DSL parse failure with source location.
struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& msg, int ln, int col)
        : std::runtime_error(msg + " (line " + std::to_string(ln) +
                             ", column " + std::to_string(col) + ")"),
          line(ln), column(col) {}
};

}  // namespace halfstat
