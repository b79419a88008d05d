#pragma once

#include <cstddef>
#include <cstdint>

#include "flatdist/flat.hpp"
#include "flatdist/linalg.hpp"

namespace flatdist {

struct OracleReport {
    double ap_distance = 0.0;
    std::size_t iterations = 0;
    double sample_min = 0.0;
    bool agreement = false;
};

// Modified Gram-Schmidt. Columns of the result are orthonormal and span the
// input columns at tolerance; near-dependent columns are dropped. k = 0 or
// all-dropped inputs yield an empty matrix.
Matrix orthonormal_basis(const Matrix& directions, double tol);

// base + Q Q^T (x - base) with Q an orthonormal basis of the flat's directions.
Vec project_onto_flat(const Vec& x, const Flat& f, double tol);

// Classical alternating projections between the two flats, started at
// vb.base. Stops when successive distance estimates change by <= eps or after
// max_iter rounds. Deliberately avoids Gram determinants so agreement with
// the solver is evidence, not tautology.
OracleReport alternating_projections(const Flat& vb, const Flat& vc,
                                     std::size_t max_iter, double eps);

// Minimum of ||p - q|| over seeded random coefficient pairs with entries in
// [-10, 10]. Always an upper bound on the true distance.
double sampled_upper_bound(const Flat& vb, const Flat& vc, std::size_t samples,
                           std::uint64_t seed);

}  // namespace flatdist
