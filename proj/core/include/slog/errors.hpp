#pragma once

#include <stdexcept>
#include <string>

namespace slog {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

// Column with zero variance after centering; callers must clean their data
// rather than rely on silent column dropping.
struct ConstantColumn : Error {
    explicit ConstantColumn(int column_index)
        : Error("column " + std::to_string(column_index + 1) + " is constant (zero variance)"),
          column(column_index) {}
    int column;
};

struct SingularSystem : Error {
    using Error::Error;
};

struct NotConvergedError : Error {
    using Error::Error;
};

struct TraceNotRetained : Error {
    using Error::Error;
};

struct UnachievableSparsity : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace slog
