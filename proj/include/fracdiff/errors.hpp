#pragma once

#include <stdexcept>
#include <string>

namespace fracdiff {

// Parameter outside its mathematical domain (order, time, coefficient sign).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Skewness violates |theta| <= min(alpha, 2-alpha).
struct SkewError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Node or offset index outside its valid range.
struct IndexError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Vector/matrix dimension mismatch.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Truncation cutoff incompatible with the sample window.
struct CutoffError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Pivot collapsed below the relative threshold during factorization.
struct SingularMatrixError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid or inconsistent scenario configuration.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Adaptive refinement failed to reach the requested accuracy.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// File read/write failure.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace fracdiff
