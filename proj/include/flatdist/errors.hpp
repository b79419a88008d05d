#pragma once

#include <stdexcept>
#include <string>

namespace flatdist {

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct EmptyInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when a linear system is singular at the configured tolerance.
struct SingularSystemError : std::runtime_error {
    double pivot_magnitude;

    explicit SingularSystemError(const std::string& what, double pivot)
        : std::runtime_error(what), pivot_magnitude(pivot) {}
};

struct RankDeficientError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace flatdist
