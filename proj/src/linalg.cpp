#include "flatdist/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace flatdist {

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vec>& columns) {
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows) {
            throw DimensionError("from_columns: column " + std::to_string(j) +
                                 " has length " + std::to_string(columns[j].size()) +
                                 ", expected " + std::to_string(rows));
        }
        m.set_column(j, columns[j]);
    }
    return m;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Vec Matrix::column(std::size_t j) const {
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(j * rows_),
               data_.begin() + static_cast<std::ptrdiff_t>((j + 1) * rows_));
}

void Matrix::set_column(std::size_t j, const Vec& v) {
    std::copy(v.begin(), v.end(), data_.begin() + static_cast<std::ptrdiff_t>(j * rows_));
}

std::vector<Vec> Matrix::columns() const {
    std::vector<Vec> out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
    return out;
}

bool Matrix::all_finite() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](double x) { return std::isfinite(x); });
}

double dot(const Vec& p, const Vec& q) {
    if (p.size() != q.size()) {
        throw DimensionError("dot: length mismatch " + std::to_string(p.size()) +
                             " vs " + std::to_string(q.size()));
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) sum += p[i] * q[i];
    return sum;
}

double norm(const Vec& p) { return std::sqrt(dot(p, p)); }

Vec add(const Vec& p, const Vec& q) {
    if (p.size() != q.size()) throw DimensionError("add: length mismatch");
    Vec out(p);
    for (std::size_t i = 0; i < p.size(); ++i) out[i] += q[i];
    return out;
}

Vec subtract(const Vec& p, const Vec& q) {
    if (p.size() != q.size()) throw DimensionError("subtract: length mismatch");
    Vec out(p);
    for (std::size_t i = 0; i < p.size(); ++i) out[i] -= q[i];
    return out;
}

Vec scale(double s, const Vec& p) {
    Vec out(p);
    for (double& x : out) x *= s;
    return out;
}

void axpy(Vec& y, double alpha, const Vec& x) {
    if (y.size() != x.size()) throw DimensionError("axpy: length mismatch");
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += alpha * x[i];
}

Vec mat_vec(const Matrix& a, const Vec& x) {
    if (x.size() != a.cols()) throw DimensionError("mat_vec: length mismatch");
    Vec out(a.rows(), 0.0);
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) out[i] += a(i, j) * x[j];
    }
    return out;
}

Matrix gram_matrix(const std::vector<Vec>& vectors) {
    if (vectors.empty()) throw EmptyInputError("gram_matrix: empty vector list");
    const std::size_t n = vectors.size();
    const std::size_t m = vectors[0].size();
    for (const Vec& v : vectors) {
        if (v.size() != m) throw DimensionError("gram_matrix: mixed vector lengths");
    }
    Matrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const double gij = dot(vectors[i], vectors[j]);
            g(i, j) = gij;
            g(j, i) = gij;
        }
    }
    return g;
}

double determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw ShapeError("determinant: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) throw ShapeError("determinant: empty matrix");
    // Extended precision keeps the cancellation in near-singular Gram
    // matrices below the solver's 1e-8 contracts.
    std::vector<long double> a(n * n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) a[j * n + i] = m(i, j);
    auto at = [&](std::size_t i, std::size_t j) -> long double& {
        return a[j * n + i];
    };
    long double det = 1.0L;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (std::abs(at(i, k)) > std::abs(at(pivot, k))) pivot = i;
        }
        if (at(pivot, k) == 0.0L) return 0.0;
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(pivot, j));
            det = -det;
        }
        det *= at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const long double f = at(i, k) / at(k, k);
            for (std::size_t j = k; j < n; ++j) at(i, j) -= f * at(k, j);
        }
    }
    return static_cast<double>(det);
}

double gram_determinant(const std::vector<Vec>& vectors, bool* clamp_fired) {
    const Matrix g = gram_matrix(vectors);
    double det = determinant(g);
    if (clamp_fired) *clamp_fired = false;
    if (det != 0.0) {
        double diag_prod = 1.0;
        for (std::size_t i = 0; i < g.rows(); ++i) diag_prod *= g(i, i);
        const double clamp_tol = 1e-12 * std::max(1.0, diag_prod);
        if (std::abs(det) <= clamp_tol) {
            det = 0.0;
            if (clamp_fired) *clamp_fired = true;
        }
    }
    return det;
}

Vec solve_linear(const Matrix& g, const Vec& r) {
    if (g.rows() != g.cols()) throw ShapeError("solve_linear: matrix not square");
    const std::size_t n = g.rows();
    if (r.size() != n) throw DimensionError("solve_linear: rhs length mismatch");
    Matrix a = g;
    Vec b = r;
    // Singularity threshold relative to the largest entry of the matrix.
    double max_entry = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            max_entry = std::max(max_entry, std::abs(a(i, j)));
    const double tiny = 1e-14 * std::max(1.0, max_entry);

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (std::abs(a(i, k)) > std::abs(a(pivot, k))) pivot = i;
        }
        const double pmag = std::abs(a(pivot, k));
        if (pmag <= tiny) {
            throw SingularSystemError("solve_linear: singular at column " +
                                          std::to_string(k),
                                      pmag);
        }
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(pivot, j));
            std::swap(b[k], b[pivot]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
            b[i] -= f * b[k];
        }
    }
    Vec x(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
        x[i] = s / a(i, i);
    }
    return x;
}

RankResult numerical_rank(const Matrix& m, double tol) {
    RankResult result{0, {}};
    std::vector<Vec> basis;  // orthonormal, spans the kept columns
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Vec col = m.column(j);
        const double original_norm = norm(col);
        for (const Vec& q : basis) {
            axpy(col, -dot(q, col), q);
        }
        const double residual = norm(col);
        if (residual > tol * std::max(1.0, original_norm)) {
            basis.push_back(scale(1.0 / residual, col));
            result.kept_columns.push_back(j);
        }
    }
    result.rank = result.kept_columns.size();
    return result;
}

}  // namespace flatdist
