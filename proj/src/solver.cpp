#include "flatdist/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace flatdist {

namespace {

double diag_product_floor_one(const Matrix& g) {
    double prod = 1.0;
    for (std::size_t i = 0; i < g.rows(); ++i) prod *= g(i, i);
    return std::max(1.0, prod);
}

// Full-rank test for the Gram determinant: g > tol^2 * max(1, prod of G_jj).
bool passes_full_rank_test(double g, const Matrix& g_mat, double tol) {
    return g > tol * tol * diag_product_floor_one(g_mat);
}

Matrix replace_column(const Matrix& g, std::size_t j, const Vec& r) {
    Matrix out = g;
    out.set_column(j, r);
    return out;
}

Vec right_hand_side(const Matrix& a, const Vec& d) {
    Vec r(a.cols(), 0.0);
    for (std::size_t j = 0; j < a.cols(); ++j) r[j] = dot(d, a.column(j));
    return r;
}

}  // namespace

Vec coefficients_cramer(const Matrix& g_mat, const Vec& r, double g) {
    if (g_mat.rows() != g_mat.cols()) throw ShapeError("coefficients_cramer: G not square");
    const std::size_t n = g_mat.rows();
    if (r.size() != n) throw DimensionError("coefficients_cramer: rhs length mismatch");
    const double floor = 1e-12 * diag_product_floor_one(g_mat);
    if (std::abs(g) <= floor) {
        throw SingularSystemError("coefficients_cramer: Gram determinant below tolerance",
                                  std::abs(g));
    }
    Vec x(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        x[j] = determinant(replace_column(g_mat, j, r)) / g;
    }
    return x;
}

Vec bordered_last_row_expansion(const Matrix& g_mat, const Vec& r, const Matrix& a) {
    const std::size_t n = g_mat.rows();
    if (g_mat.cols() != n || r.size() != n || a.cols() != n) {
        throw DimensionError("bordered_last_row_expansion: inconsistent sizes");
    }
    Vec out(a.rows(), 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        // Minor of entry (n+1, j+1): G's columns except j, then r appended.
        Matrix minor(n, n);
        std::size_t col = 0;
        for (std::size_t k = 0; k < n; ++k) {
            if (k == j) continue;
            minor.set_column(col++, g_mat.column(k));
        }
        minor.set_column(n - 1, r);
        // Sign of entry (n+1, j+1) is (-1)^(n+1 + j+1) = (-1)^(n+j).
        const double sign = ((n + j) % 2 == 0) ? 1.0 : -1.0;
        axpy(out, sign * determinant(minor), a.column(j));
    }
    return out;
}

PairSolution optimal_pair(const Flat& vb_in, const Flat& vc_in, double tol) {
    const Flat vb = validate(vb_in, tol);
    const Flat vc = validate(vc_in, tol);
    const ProblemData pd = difference_setup(vb, vc);
    const std::size_t n = pd.a.cols();

    PairSolution sol;
    sol.diagnostics.tolerances_used.rank_tol = tol;

    Vec x(n, 0.0);
    if (n == 0) {
        sol.diagnostics.path = SolvePath::PointPoint;
        sol.diagnostics.rank_used = 0;
        sol.diagnostics.unique = true;
    } else {
        const std::vector<Vec> cols = pd.a.columns();
        const Matrix g_mat = gram_matrix(cols);
        bool clamp = false;
        const double g = gram_determinant(cols, &clamp);
        sol.diagnostics.gram_det = g;
        sol.diagnostics.tolerances_used.gram_clamp_fired = clamp;
        const Vec r = right_hand_side(pd.a, pd.d);

        bool solved = false;
        if (passes_full_rank_test(g, g_mat, tol)) {
            try {
                x = coefficients_cramer(g_mat, r, g);
                sol.diagnostics.path = SolvePath::FullRankCramer;
                sol.diagnostics.rank_used = n;
                sol.diagnostics.unique = true;
                solved = true;
            } catch (const SingularSystemError&) {
                // fall through to column reduction
            }
        }
        if (!solved) {
            const RankResult rr = numerical_rank(pd.a, tol);
            sol.diagnostics.path = SolvePath::ReducedColumns;
            sol.diagnostics.rank_used = rr.rank;
            sol.diagnostics.unique = (rr.rank == n);
            for (std::size_t j = 0; j < n; ++j) {
                if (std::find(rr.kept_columns.begin(), rr.kept_columns.end(), j) ==
                    rr.kept_columns.end()) {
                    sol.diagnostics.dropped_columns.push_back(j);
                }
            }
            if (rr.rank > 0) {
                std::vector<Vec> kept;
                Vec r_kept(rr.rank, 0.0);
                for (std::size_t i = 0; i < rr.rank; ++i) {
                    kept.push_back(pd.a.column(rr.kept_columns[i]));
                    r_kept[i] = r[rr.kept_columns[i]];
                }
                const Matrix g_kept = gram_matrix(kept);
                const double gk = gram_determinant(kept);
                Vec x_kept;
                try {
                    x_kept = coefficients_cramer(g_kept, r_kept, gk);
                } catch (const SingularSystemError&) {
                    x_kept = solve_linear(g_kept, r_kept);
                }
                for (std::size_t i = 0; i < rr.rank; ++i) {
                    x[rr.kept_columns[i]] = x_kept[i];
                }
            }
        }
    }

    // Split x into the A-frame coefficients (u for b + B u, v for c - C v).
    Vec u(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(pd.split));
    Vec v(x.begin() + static_cast<std::ptrdiff_t>(pd.split), x.end());

    sol.b_star = vb.base;
    for (std::size_t j = 0; j < u.size(); ++j) {
        axpy(sol.b_star, u[j], vb.directions.column(j));
    }
    sol.c_star = vc.base;
    for (std::size_t j = 0; j < v.size(); ++j) {
        axpy(sol.c_star, -v[j], vc.directions.column(j));
    }

    // Report coefficients in each flat's own parameterization.
    sol.u_star = (vb.orientation == Orientation::Plus) ? u : scale(-1.0, u);
    sol.v_star = (vc.orientation == Orientation::Minus) ? v : scale(-1.0, v);

    sol.distance = norm(subtract(sol.b_star, sol.c_star));
    sol.distance_sq_gram = sol.distance * sol.distance;
    if (n > 0 && sol.diagnostics.path == SolvePath::FullRankCramer) {
        const std::vector<Vec> cols = pd.a.columns();
        std::vector<Vec> bordered;
        bordered.reserve(n + 1);
        bordered.push_back(pd.d);
        bordered.insert(bordered.end(), cols.begin(), cols.end());
        sol.distance_sq_gram =
            gram_determinant(bordered) / sol.diagnostics.gram_det;
        if (sol.distance_sq_gram < 0.0) sol.distance_sq_gram = 0.0;
    } else if (n == 0) {
        sol.distance_sq_gram = dot(pd.d, pd.d);
    }
    return sol;
}

double distance_squared_gram(const Flat& vb_in, const Flat& vc_in, double tol) {
    const Flat vb = validate(vb_in, tol);
    const Flat vc = validate(vc_in, tol);
    const ProblemData pd = difference_setup(vb, vc);
    const std::size_t n = pd.a.cols();
    if (n == 0) return dot(pd.d, pd.d);

    const std::vector<Vec> cols = pd.a.columns();
    const Matrix g_mat = gram_matrix(cols);
    const double g = gram_determinant(cols);
    if (!passes_full_rank_test(g, g_mat, tol)) {
        throw RankDeficientError(
            "distance_squared_gram: A is rank-deficient at tolerance " +
            std::to_string(tol));
    }
    std::vector<Vec> bordered;
    bordered.reserve(n + 1);
    bordered.push_back(pd.d);
    bordered.insert(bordered.end(), cols.begin(), cols.end());
    const double num = gram_determinant(bordered);
    return num / g;
}

double distance(const Flat& vb, const Flat& vc, double tol) {
    return optimal_pair(vb, vc, tol).distance;
}

}  // namespace flatdist
