#include "flatdist/flat.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace flatdist {

Vec Flat::point_at(const Vec& t) const {
    Vec delta = mat_vec(directions, t);
    const double sign = (orientation == Orientation::Plus) ? 1.0 : -1.0;
    Vec p = base;
    axpy(p, sign, delta);
    return p;
}

static void check_flat_dims(const Flat& f) {
    if (f.directions.cols() > 0 && f.directions.rows() != f.base.size()) {
        throw DimensionError("flat: base length " + std::to_string(f.base.size()) +
                             " does not match direction rows " +
                             std::to_string(f.directions.rows()));
    }
}

Flat validate(const Flat& f, double tol, ValidateReport* report) {
    check_flat_dims(f);
    if (report) report->dropped_zero_columns.clear();
    std::vector<Vec> kept;
    for (std::size_t j = 0; j < f.directions.cols(); ++j) {
        Vec col = f.directions.column(j);
        if (norm(col) <= tol) {
            if (report) report->dropped_zero_columns.push_back(j);
        } else {
            kept.push_back(std::move(col));
        }
    }
    Flat out;
    out.base = f.base;
    out.directions = Matrix::from_columns(f.base.size(), kept);
    out.orientation = f.orientation;
    return out;
}

bool contains(const Flat& f, const Vec& p, double tol) {
    check_flat_dims(f);
    if (p.size() != f.base.size()) {
        throw DimensionError("contains: point length mismatch");
    }
    Vec r = subtract(p, f.base);
    const double r_norm = norm(r);
    if (f.directions.cols() == 0) return r_norm <= tol;

    // Project r onto span(directions) via Gram-Schmidt on the columns.
    std::vector<Vec> basis;
    for (std::size_t j = 0; j < f.directions.cols(); ++j) {
        Vec col = f.directions.column(j);
        const double original_norm = norm(col);
        for (const Vec& q : basis) axpy(col, -dot(q, col), q);
        const double res = norm(col);
        if (res > 1e-12 * std::max(1.0, original_norm)) {
            basis.push_back(scale(1.0 / res, col));
        }
    }
    for (const Vec& q : basis) axpy(r, -dot(q, r), q);
    return norm(r) <= tol * std::max(1.0, r_norm);
}

ProblemData difference_setup(const Flat& vb, const Flat& vc) {
    check_flat_dims(vb);
    check_flat_dims(vc);
    if (vb.base.size() != vc.base.size()) {
        throw DimensionError("difference_setup: ambient dimension mismatch");
    }
    const std::size_t m = vb.base.size();
    const std::size_t l1 = vb.directions.cols();
    const std::size_t l2 = vc.directions.cols();

    ProblemData pd;
    pd.a = Matrix(m, l1 + l2);
    for (std::size_t j = 0; j < l1; ++j) pd.a.set_column(j, vb.directions.column(j));
    for (std::size_t j = 0; j < l2; ++j)
        pd.a.set_column(l1 + j, vc.directions.column(j));
    pd.d = subtract(vc.base, vb.base);
    pd.split = l1;
    pd.column_origin.assign(l1, ColumnOrigin::FromB);
    pd.column_origin.insert(pd.column_origin.end(), l2, ColumnOrigin::FromC);
    return pd;
}

}  // namespace flatdist
