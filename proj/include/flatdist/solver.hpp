#pragma once

#include <cstddef>
#include <vector>

#include "flatdist/flat.hpp"
#include "flatdist/linalg.hpp"

namespace flatdist {

enum class SolvePath { FullRankCramer, ReducedColumns, PointPoint };

struct Tolerances {
    double rank_tol = kDefaultRankTol;
    bool gram_clamp_fired = false;
};

struct Diagnostics {
    double gram_det = 1.0;  // g(a_1..a_n); 1 for the empty column set
    std::size_t rank_used = 0;
    std::vector<std::size_t> dropped_columns;
    bool unique = true;
    Tolerances tolerances_used;
    SolvePath path = SolvePath::PointPoint;
};

struct PairSolution {
    Vec b_star;
    Vec c_star;
    Vec u_star;  // coefficients in Vb's own parameterization
    Vec v_star;  // coefficients in Vc's own parameterization
    double distance = 0.0;
    double distance_sq_gram = 0.0;
    Diagnostics diagnostics;
};

// Cramer's rule for G x = r: x_j = det(G with column j replaced by r) / g.
// This is the coefficient of a_j in the last-row expansion of the bordered
// determinant, divided by -g. Throws SingularSystemError when |g| is at or
// below the clamp tolerance.
Vec coefficients_cramer(const Matrix& g_mat, const Vec& r, double g);

// Last-row cofactor expansion of the bordered determinant: the m-vector
// sum_j cof_j * a_j with cof_j the signed minor of entry (n+1, j). Dividing
// by -g yields A * x*, the projection of d onto Range(A).
Vec bordered_last_row_expansion(const Matrix& g_mat, const Vec& r, const Matrix& a);

PairSolution optimal_pair(const Flat& vb, const Flat& vc, double tol = kDefaultRankTol);

// Squared distance as the ratio g(d, a_1..a_n) / g(a_1..a_n). Requires A to
// pass the full-rank test; throws RankDeficientError otherwise (use
// optimal_pair, which handles every case). For n = 0 returns dot(d, d).
double distance_squared_gram(const Flat& vb, const Flat& vc, double tol = kDefaultRankTol);

double distance(const Flat& vb, const Flat& vc, double tol = kDefaultRankTol);

}  // namespace flatdist
