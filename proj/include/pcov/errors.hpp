#pragma once

#include <stdexcept>
#include <string>

namespace pcov {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ValidationKind {
    DuplicateEdge,
    SelfLoop,
    NegativeWeight,
    MissingGroup,
    EmptyGroupPartition,
    UnknownVertex,
    UnknownEdge,
    IsolatedRequired,
};

struct ValidationError : Error {
    ValidationKind kind;
    ValidationError(ValidationKind k, const std::string& msg) : Error(msg), kind(k) {}
};

/// Malformed instance file; line/column are 1-based.
struct SyntaxError : Error {
    int line;
    int column;
    SyntaxError(int l, int c, const std::string& msg)
        : Error("line " + std::to_string(l) + ", column " + std::to_string(c) + ": " + msg),
          line(l),
          column(c) {}
};

struct InvalidParameter : Error {
    using Error::Error;
};

/// Exponential oracle invoked beyond its hard size cap.
struct TooLarge : Error {
    using Error::Error;
};

/// Simplex exceeded its pivot cap (cycling or an implementation bug).
struct NumericalFailure : Error {
    using Error::Error;
};

/// Sparse-LP rounding saw more fractional variables than group count.
struct NonBasicSolution : Error {
    using Error::Error;
};

struct InvalidEpsilon : Error {
    using Error::Error;
};

/// A guess pipeline failed numerically; carries the guessed vertex set.
struct PipelineFailure : Error {
    using Error::Error;
};

} // namespace pcov
