#include <moncat/int_matrix.hpp>
#include <moncat/smith.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "support/oracles.hpp"
#include "support/testutil.hpp"

using moncat::Int;
using moncat::IntMatrix;
using moncat::SnfSolver;
using moncat::hermite_column_form;
using moncat::kernel_basis;
using moncat::smith_normal_form;

namespace {

bool is_unimodular(const IntMatrix& m) {
    const Int d = m.determinant();
    return d == 1 || d == -1;
}

void check_smith_properties(const IntMatrix& m) {
    const auto snf = smith_normal_form(m);
    REQUIRE(snf.U * m * snf.V == snf.S);
    REQUIRE(is_unimodular(snf.U));
    REQUIRE(is_unimodular(snf.V));
    REQUIRE(snf.U_inv * snf.U == IntMatrix::identity(m.rows()));
    REQUIRE(snf.V * snf.V_inv == IntMatrix::identity(m.cols()));
    const auto diag = snf.diagonal();
    Int prev = 0;
    for (std::size_t i = 0; i < diag.size(); ++i) {
        REQUIRE(diag[i] >= 0);
        if (i > 0) {
            // zero entries trail, nonzero ones divide their successor
            if (prev == 0) REQUIRE(diag[i] == 0);
            if (prev != 0 && diag[i] != 0) REQUIRE(diag[i] % prev == 0);
        }
        prev = diag[i];
    }
    for (std::size_t i = 0; i < snf.S.rows(); ++i)
        for (std::size_t j = 0; j < snf.S.cols(); ++j)
            if (i != j) REQUIRE(snf.S.at(i, j) == 0);
}

}  // namespace

TEST_CASE("matrix arithmetic basics") {
    const auto a = IntMatrix::from_rows({{1, 2}, {3, 4}});
    const auto b = IntMatrix::from_rows({{0, 1}, {1, 0}});
    REQUIRE(a * b == IntMatrix::from_rows({{2, 1}, {4, 3}}));
    REQUIRE(a + b - b == a);
    REQUIRE((-a) + a == IntMatrix(2, 2));
    REQUIRE(a.transpose().transpose() == a);
    REQUIRE(IntMatrix::identity(3) * IntMatrix::identity(3) == IntMatrix::identity(3));
}

TEST_CASE("hstack, vstack and block_diag assemble the right shapes") {
    const auto a = IntMatrix::from_rows({{1, 2}});
    const auto b = IntMatrix::from_rows({{3}});
    const auto h = a.hstack(b);
    REQUIRE(h == IntMatrix::from_rows({{1, 2, 3}}));
    const auto v = a.vstack(IntMatrix::from_rows({{4, 5}}));
    REQUIRE(v == IntMatrix::from_rows({{1, 2}, {4, 5}}));
    const auto d = IntMatrix::block_diag(a, b);
    REQUIRE(d == IntMatrix::from_rows({{1, 2, 0}, {0, 0, 3}}));
}

TEST_CASE("kronecker product") {
    const auto a = IntMatrix::from_rows({{1, 2}, {3, 4}});
    const auto i2 = IntMatrix::identity(2);
    const auto k = IntMatrix::kronecker(a, i2);
    REQUIRE(k == IntMatrix::from_rows(
                     {{1, 0, 2, 0}, {0, 1, 0, 2}, {3, 0, 4, 0}, {0, 3, 0, 4}}));
    // mixed-product property on random instances
    for (int trial = 0; trial < 10; ++trial) {
        const auto p = testutil::random_matrix(2, 3);
        const auto q = testutil::random_matrix(3, 2);
        const auto r = testutil::random_matrix(2, 2);
        const auto s = testutil::random_matrix(2, 3);
        REQUIRE(IntMatrix::kronecker(p * q, r * s) ==
                IntMatrix::kronecker(p, r) * IntMatrix::kronecker(q, s));
    }
}

TEST_CASE("Bareiss determinant agrees with cofactor expansion") {
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = static_cast<std::size_t>(testutil::rand_int(1, 5));
        const auto m = testutil::random_matrix(n, n);
        REQUIRE(m.determinant() == oracles::determinant_by_cofactors(m));
    }
    REQUIRE(IntMatrix(0, 0).determinant() == 1);
    REQUIRE(IntMatrix(3, 3).determinant() == 0);
}

TEST_CASE("Smith form of pinned matrices") {
    SECTION("zero and identity") {
        REQUIRE(smith_normal_form(IntMatrix(2, 3)).diagonal() == std::vector<Int>{0, 0});
        REQUIRE(smith_normal_form(IntMatrix::identity(3)).invariant_factors() ==
                std::vector<Int>{1, 1, 1});
    }
    SECTION("classic example") {
        const auto m = IntMatrix::from_rows({{2, 4}, {6, 8}});
        REQUIRE(smith_normal_form(m).invariant_factors() == std::vector<Int>{2, 4});
    }
    SECTION("divisibility is enforced, not just diagonalization") {
        const auto m = IntMatrix::from_rows({{2, 0}, {0, 3}});
        REQUIRE(smith_normal_form(m).invariant_factors() == std::vector<Int>{1, 6});
    }
}

TEST_CASE("Smith form properties on random matrices") {
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t r = static_cast<std::size_t>(testutil::rand_int(1, 6));
        const std::size_t c = static_cast<std::size_t>(testutil::rand_int(1, 6));
        check_smith_properties(testutil::random_matrix(r, c));
    }
    check_smith_properties(IntMatrix(4, 2));
    check_smith_properties(IntMatrix(1, 1));
}

TEST_CASE("Smith invariant factors match the determinantal-divisor oracle") {
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t r = static_cast<std::size_t>(testutil::rand_int(1, 4));
        const std::size_t c = static_cast<std::size_t>(testutil::rand_int(1, 4));
        const auto m = testutil::random_matrix(r, c, -6, 6);
        REQUIRE(smith_normal_form(m).invariant_factors() ==
                oracles::invariant_factors_by_minors(m));
    }
}

TEST_CASE("solver recovers exact solutions and rejects unsolvable systems") {
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = static_cast<std::size_t>(testutil::rand_int(1, 5));
        const std::size_t c = static_cast<std::size_t>(testutil::rand_int(1, 5));
        const auto m = testutil::random_matrix(r, c);
        SnfSolver solver(m);
        const auto x = testutil::random_matrix(c, 1);
        const auto sol = solver.solve(m * x);
        REQUIRE(sol.has_value());
        REQUIRE(m * *sol == m * x);
    }
    SnfSolver doubling(IntMatrix::from_rows({{2}}));
    REQUIRE_FALSE(doubling.solve(IntMatrix::column({Int(1)})).has_value());
    REQUIRE(doubling.solve(IntMatrix::column({Int(-4)})).has_value());
    SnfSolver zero(IntMatrix(2, 2));
    REQUIRE_FALSE(zero.solve(IntMatrix::column({Int(1), Int(0)})).has_value());
    REQUIRE(zero.solve(IntMatrix(2, 1)).has_value());
}

TEST_CASE("kernel basis spans the kernel") {
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t r = static_cast<std::size_t>(testutil::rand_int(1, 5));
        const std::size_t c = static_cast<std::size_t>(testutil::rand_int(1, 5));
        const auto m = testutil::random_matrix(r, c);
        const auto k = kernel_basis(m);
        REQUIRE((m * k).is_zero());
        const auto rank = smith_normal_form(m).rank;
        REQUIRE(k.cols() == c - rank);
        // columns of k are part of a basis, hence primitive: SNF is all ones
        if (k.cols() > 0) {
            const auto factors = smith_normal_form(k).invariant_factors();
            for (const auto& f : factors) REQUIRE(f == 1);
        }
    }
}

TEST_CASE("Hermite column form is a lattice invariant") {
    SECTION("pinned") {
        // span{(4,0),(6,2)} = span{(2,2),(0,4)}, index 8 in Z^2
        const auto m = IntMatrix::from_rows({{4, 6}, {0, 2}});
        const auto h = hermite_column_form(m);
        REQUIRE(h == IntMatrix::from_rows({{2, 0}, {2, 4}}));
    }
    SECTION("column operations leave it unchanged") {
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t r = static_cast<std::size_t>(testutil::rand_int(1, 4));
            const std::size_t c = static_cast<std::size_t>(testutil::rand_int(1, 4));
            auto m = testutil::random_matrix(r, c);
            auto n = m;
            // shuffle columns, negate one, add a multiple of another
            if (c >= 2) {
                n.swap_cols(0, c - 1);
                n.add_col_multiple(0, c - 1, Int(testutil::rand_int(-3, 3)));
            }
            n.negate_col(0);
            REQUIRE(hermite_column_form(m) == hermite_column_form(n));
        }
    }
    SECTION("scaling changes the lattice") {
        const auto m = IntMatrix::from_rows({{1, 0}, {0, 1}});
        auto two = m;
        two.at(0, 0) = 2;
        REQUIRE(hermite_column_form(m) != hermite_column_form(two));
    }
}
