#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "flatdist/errors.hpp"

namespace flatdist {

using Vec = std::vector<double>;

// Dense real matrix, column-major storage. Zero columns is a legal value
// (a point-flat has no directions).
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}

    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    static Matrix from_columns(std::size_t rows, const std::vector<Vec>& columns);
    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[j * rows_ + i]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[j * rows_ + i]; }

    Vec column(std::size_t j) const;
    void set_column(std::size_t j, const Vec& v);
    std::vector<Vec> columns() const;

    bool all_finite() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> data_;
};

double dot(const Vec& p, const Vec& q);
double norm(const Vec& p);

Vec add(const Vec& p, const Vec& q);
Vec subtract(const Vec& p, const Vec& q);
Vec scale(double s, const Vec& p);

// y += alpha * x
void axpy(Vec& y, double alpha, const Vec& x);

// A * x for column-major A.
Vec mat_vec(const Matrix& a, const Vec& x);

// Gram matrix of a non-empty vector list: entry (i,j) = dot(y_i, y_j).
Matrix gram_matrix(const std::vector<Vec>& vectors);

// det(M) by row reduction with partial pivoting.
double determinant(const Matrix& m);

// det(gram_matrix(vectors)), with small negative round-off clamped to 0.
// clamp_fired is set when the clamp changes the value.
double gram_determinant(const std::vector<Vec>& vectors, bool* clamp_fired = nullptr);

// Solves G x = r by row reduction with partial pivoting.
Vec solve_linear(const Matrix& g, const Vec& r);

struct RankResult {
    std::size_t rank;
    std::vector<std::size_t> kept_columns;
};

// Greedy Gram-Schmidt over columns in index order; a column is kept when its
// residual after projection onto the previously kept columns exceeds
// tol * max(1, original norm). Deterministic: strict > test, fixed scan order.
RankResult numerical_rank(const Matrix& m, double tol);

inline constexpr double kDefaultRankTol = 1e-9;

}  // namespace flatdist
