#pragma once

#include <cstddef>
#include <vector>

#include "flatdist/linalg.hpp"

namespace flatdist {

// Sign convention for the parameterization: Plus means base + D*t,
// Minus means base - D*t. Direction columns are stored as given, unnegated.
enum class Orientation { Plus, Minus };

// Affine subspace of R^m in generator form: base point plus the span of the
// direction columns.
struct Flat {
    Vec base;
    Matrix directions;  // m x k, k >= 0
    Orientation orientation = Orientation::Plus;

    std::size_t ambient_dim() const { return base.size(); }
    std::size_t num_directions() const { return directions.cols(); }

    // A point on the flat for coefficient vector t (orientation applied).
    Vec point_at(const Vec& t) const;
};

struct ValidateReport {
    std::vector<std::size_t> dropped_zero_columns;
};

// Removes zero-norm direction columns (norm <= tol). The represented point
// set is unchanged; duplicate or dependent columns are kept (rank handling
// is the solver's job).
Flat validate(const Flat& f, double tol, ValidateReport* report = nullptr);

// True iff p lies on the flat: the residual of (p - base) after projection
// onto span(directions) has norm <= tol * max(1, ||p - base||).
bool contains(const Flat& f, const Vec& p, double tol);

enum class ColumnOrigin { FromB, FromC };

// Data of the minimization min_x ||A x - d||: A = [B C], d = c - b.
struct ProblemData {
    Matrix a;
    Vec d;
    std::size_t split;  // columns 0..split-1 come from Vb
    std::vector<ColumnOrigin> column_origin;
};

ProblemData difference_setup(const Flat& vb, const Flat& vc);

}  // namespace flatdist
