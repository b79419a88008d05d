#include "flatdist/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace flatdist {

Matrix orthonormal_basis(const Matrix& directions, double tol) {
    std::vector<Vec> basis;
    for (std::size_t j = 0; j < directions.cols(); ++j) {
        Vec col = directions.column(j);
        const double original_norm = norm(col);
        // Two MGS passes keep the basis orthonormal to round-off.
        for (int pass = 0; pass < 2; ++pass) {
            for (const Vec& q : basis) axpy(col, -dot(q, col), q);
        }
        const double res = norm(col);
        if (res > tol * std::max(1.0, original_norm)) {
            basis.push_back(scale(1.0 / res, col));
        }
    }
    return Matrix::from_columns(directions.rows(), basis);
}

Vec project_onto_flat(const Vec& x, const Flat& f, double tol) {
    const Matrix q = orthonormal_basis(f.directions, tol);
    Vec rel = subtract(x, f.base);
    Vec p = f.base;
    for (std::size_t j = 0; j < q.cols(); ++j) {
        const Vec qj = q.column(j);
        axpy(p, dot(qj, rel), qj);
    }
    return p;
}

OracleReport alternating_projections(const Flat& vb, const Flat& vc,
                                     std::size_t max_iter, double eps) {
    OracleReport report;
    Vec p = vb.base;
    Vec q = project_onto_flat(p, vc, kDefaultRankTol);
    double dist = norm(subtract(p, q));
    report.iterations = 0;
    for (std::size_t it = 1; it <= max_iter; ++it) {
        p = project_onto_flat(q, vb, kDefaultRankTol);
        q = project_onto_flat(p, vc, kDefaultRankTol);
        const double next = norm(subtract(p, q));
        report.iterations = it;
        if (std::abs(dist - next) <= eps) {
            dist = next;
            break;
        }
        dist = next;
    }
    report.ap_distance = dist;
    return report;
}

double sampled_upper_bound(const Flat& vb, const Flat& vc, std::size_t samples,
                           std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coeff(-10.0, 10.0);
    double best = std::numeric_limits<double>::infinity();
    Vec u(vb.directions.cols()), v(vc.directions.cols());
    for (std::size_t s = 0; s < samples; ++s) {
        for (double& x : u) x = coeff(rng);
        for (double& x : v) x = coeff(rng);
        best = std::min(best, norm(subtract(vb.point_at(u), vc.point_at(v))));
    }
    return best;
}

}  // namespace flatdist
