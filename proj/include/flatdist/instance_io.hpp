#pragma once

#include <optional>
#include <string>

#include "flatdist/flat.hpp"

namespace flatdist {

struct Instance {
    Flat vb;  // b + B u
    Flat vc;  // c - C v
    std::optional<double> tol_override;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parses the JSON instance document (see docs/format.md). Throws ParseError
// on malformed documents, DimensionError on inconsistent sizes.
Instance parse_instance(const std::string& json_text);
Instance load_instance(const std::string& path);

// Fixed-notation decimal with 12 digits after the point, locale-independent.
std::string format_real(double x);

}  // namespace flatdist
