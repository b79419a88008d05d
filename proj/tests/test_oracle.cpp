#include <doctest.h>

#include <cmath>
#include <random>

#include "flatdist/oracle.hpp"
#include "flatdist/solver.hpp"
#include "test_support.hpp"

using namespace flatdist;
namespace ts = testsupport;

TEST_CASE("orthonormal_basis") {
    SUBCASE("spans the xy-plane") {
        const Matrix q =
            orthonormal_basis(Matrix::from_columns(3, {{1, 0, 0}, {1, 1, 0}}), 1e-10);
        REQUIRE(q.cols() == 2);
        CHECK(norm(subtract(q.column(0), {1, 0, 0})) <= 1e-12);
        CHECK(norm(subtract(q.column(1), {0, 1, 0})) <= 1e-12);
    }
    SUBCASE("unit column unchanged") {
        const Matrix q = orthonormal_basis(Matrix::from_columns(3, {{0, 0, 1}}), 1e-10);
        REQUIRE(q.cols() == 1);
        CHECK(q.column(0) == Vec{0, 0, 1});
    }
    SUBCASE("zero column yields empty basis") {
        CHECK(orthonormal_basis(Matrix::from_columns(3, {{0, 0, 0}}), 1e-10).cols() == 0);
    }
    SUBCASE("empty input") {
        CHECK(orthonormal_basis(Matrix(3, 0), 1e-10).cols() == 0);
    }
}

TEST_CASE("orthonormal_basis is orthonormal on random inputs") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<std::size_t> m_dist(2, 10);
        const std::size_t m = m_dist(rng);
        std::uniform_int_distribution<std::size_t> k_dist(1, m);
        const Matrix q = orthonormal_basis(ts::random_matrix(rng, m, k_dist(rng)), 1e-10);
        for (std::size_t i = 0; i < q.cols(); ++i) {
            for (std::size_t j = 0; j < q.cols(); ++j) {
                const double expected = (i == j) ? 1.0 : 0.0;
                CHECK(std::abs(dot(q.column(i), q.column(j)) - expected) <= 1e-10);
            }
        }
    }
}

TEST_CASE("alternating projections on analytic cases") {
    SUBCASE("skew lines") {
        const Flat vb{{0, 0, 0}, Matrix::from_columns(3, {{1, 0, 0}}),
                      Orientation::Plus};
        const Flat vc{{0, 0, 1}, Matrix::from_columns(3, {{0, 1, 0}}),
                      Orientation::Minus};
        const OracleReport r = alternating_projections(vb, vc, 10000, 1e-12);
        CHECK(r.ap_distance == doctest::Approx(1.0).epsilon(1e-8));
    }
    SUBCASE("identical flats") {
        const Flat vb{{0, 0, 0}, Matrix::from_columns(3, {{1, 0, 0}}),
                      Orientation::Plus};
        const OracleReport r = alternating_projections(vb, vb, 10000, 1e-12);
        CHECK(r.ap_distance <= 1e-12);
        CHECK(r.iterations <= 2);
    }
    SUBCASE("parallel planes") {
        const Flat p0{{0, 0, 0}, Matrix::from_columns(3, {{1, 0, 0}, {0, 1, 0}}),
                      Orientation::Plus};
        const Flat p2{{0, 0, 2}, Matrix::from_columns(3, {{1, 0, 0}, {0, 1, 0}}),
                      Orientation::Minus};
        const OracleReport r = alternating_projections(p0, p2, 10000, 1e-12);
        CHECK(r.ap_distance == doctest::Approx(2.0).epsilon(1e-10));
    }
}

TEST_CASE("alternating projections agree with the solver") {
    std::mt19937_64 rng(32);
    int converged = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const auto inst = ts::random_full_rank_instance(rng);
        const double d = distance(inst.vb, inst.vc);
        const OracleReport r = alternating_projections(inst.vb, inst.vc, 10000, 1e-13);
        // Nearly parallel direction spaces can exhaust the iteration cap;
        // those runs signal non-convergence via iterations == max_iter.
        if (r.iterations >= 10000) continue;
        ++converged;
        CHECK(std::abs(r.ap_distance - d) <= 1e-6 * std::max(1.0, d));
    }
    CHECK(converged >= 40);
}

TEST_CASE("sampled_upper_bound") {
    SUBCASE("identical points") {
        const Flat vb{{1, 2}, Matrix(2, 0), Orientation::Plus};
        const Flat vc{{1, 2}, Matrix(2, 0), Orientation::Minus};
        CHECK(sampled_upper_bound(vb, vc, 10, 7) == 0.0);
    }
    SUBCASE("skew lines bound sits above the distance") {
        const Flat vb{{0, 0, 0}, Matrix::from_columns(3, {{1, 0, 0}}),
                      Orientation::Plus};
        const Flat vc{{0, 0, 1}, Matrix::from_columns(3, {{0, 1, 0}}),
                      Orientation::Minus};
        const double bound = sampled_upper_bound(vb, vc, 10000, 7);
        CHECK(bound >= 1.0 - 1e-12);
        CHECK(bound <= 1.5);
    }
    SUBCASE("deterministic for a fixed seed") {
        const Flat vb{{0, 0, 0}, Matrix::from_columns(3, {{1, 0, 0}}),
                      Orientation::Plus};
        const Flat vc{{0, 0, 1}, Matrix::from_columns(3, {{0, 1, 0}}),
                      Orientation::Minus};
        CHECK(sampled_upper_bound(vb, vc, 500, 42) ==
              sampled_upper_bound(vb, vc, 500, 42));
    }
}

TEST_CASE("sampled_upper_bound never undercuts the solver") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 50; ++trial) {
        const auto inst = ts::random_full_rank_instance(rng);
        const double d = distance(inst.vb, inst.vc);
        CHECK(sampled_upper_bound(inst.vb, inst.vc, 500, trial) >= d - 1e-9);
    }
}
