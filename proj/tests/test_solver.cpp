// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pdae/errors.hpp"
#include "pdae/problem.hpp"
#include "pdae/solver.hpp"

using namespace pdae;
using solver::march;

namespace {

// Degenerate system whose solution is a polynomial of degree <= 2 in each
// variable: the collocation derivatives are exact on it, so the scheme must
// reproduce it to rounding error.
PdaeProblem polynomial_problem() {
    PdaeProblem pr;
    pr.name = "polynomial";
    pr.n = 2;
    pr.A = [](double, double) { return DenseMatrix::from_rows({{1.0, 0.0}, {0.0, 0.0}}); };
    pr.B = [](double, double) { return DenseMatrix::from_rows({{0.0, 0.0}, {0.0, 1.0}}); };
    pr.C = [](double, double) { return DenseMatrix::identity(2); };
    pr.exact = [](double x, double t) { return Vector{x * x + t * t, x * t + 1.0}; };
    pr.f = [](double x, double t) {
        return Vector{2.0 * t + x * x + t * t, t + x * t + 1.0};
    };
    pr.psi = [](double t) { return Vector{t * t, 1.0}; };
    pr.phi = [](double x) { return Vector{x * x, 1.0}; };
    return pr;
}

solver::SolutionGrid filled_with_exact(const PdaeProblem& pr, const GridSpec& grid) {
    solver::SolutionGrid sol(grid.n1, grid.n2, pr.n);
    for (int j = 0; j <= grid.n2; ++j)
        for (int i = 0; i <= grid.n1; ++i) {
            const Vector v = pr.exact(grid.x(i), grid.t(j));
            sol.set(i, j, v);
        }
    return sol;
}

}  // namespace

TEST_CASE("scheme reproduces polynomial data to rounding error") {
    const PdaeProblem pr = polynomial_problem();
    const GridSpec grid = GridSpec::make(0.0, 1.0, 0.0, 1.0, 0.1, 0.1);
    const auto [sol, report] = march(pr, grid, 2, 2);
    REQUIRE(report.delta_u.has_value());
    CHECK(*report.delta_u <= 1e-10);
    CHECK(sol.all_filled());
    CHECK(report.cells_solved == static_cast<long>(grid.n1) * grid.n2);
}

TEST_CASE("solved cell matches the plugged-in solution at every unknown node") {
    const PdaeProblem pr = polynomial_problem();
    const GridSpec grid = GridSpec::make(0.0, 1.0, 0.0, 1.0, 0.25, 0.25);
    const auto sx = stencil::build(2);
    const auto st = stencil::build(2);
    const solver::SolutionGrid sol = filled_with_exact(pr, grid);
    const solver::CellSystem cell = solver::assemble_cell(pr, grid, sx, st, 1, 1, sol);
    CHECK(cell.order == 2 * 2 * pr.n);
    CHECK(cell.matrix.rows() == cell.order);
    CHECK(cell.matrix.cols() == cell.order);
    REQUIRE(cell.node_map.size() == 4);
    // Unknowns are ordered with the x-offset as the slow index.
    CHECK(cell.node_map[0] == std::pair{2, 2});
    CHECK(cell.node_map[1] == std::pair{2, 3});
    CHECK(cell.node_map[2] == std::pair{3, 2});
    CHECK(cell.node_map[3] == std::pair{3, 3});
    const std::vector<Vector> values = solver::solve_cell(cell);
    REQUIRE(values.size() == cell.node_map.size());
    for (size_t k = 0; k < values.size(); ++k) {
        const auto [i, j] = cell.node_map[k];
        const Vector want = pr.exact(grid.x(i), grid.t(j));
        for (int c = 0; c < pr.n; ++c)
            CHECK(values[k][c] == doctest::Approx(want[c]).epsilon(1e-12));
    }
}

TEST_CASE("cell assembly reads only the base layer and the left column") {
    const PdaeProblem pr = example1();
    const GridSpec grid = GridSpec::make(0.0, 1.0, 0.0, 1.0, 0.1, 0.1);
    const auto sx = stencil::build(2);
    const auto st = stencil::build(2);
    const int i0 = 2, j0 = 3;
    const solver::SolutionGrid clean = filled_with_exact(pr, grid);
    solver::SolutionGrid poisoned = filled_with_exact(pr, grid);
    const Vector junk(pr.n, 1e6);
    for (int j = 0; j <= grid.n2; ++j)
        for (int i = 0; i <= grid.n1; ++i) {
            const bool base_layer = (j == j0 && i >= i0 && i <= i0 + 2);
            const bool left_column = (i == i0 && j >= j0 && j <= j0 + 2);
            if (!base_layer && !left_column) poisoned.set(i, j, junk);
        }
    const solver::CellSystem a = solver::assemble_cell(pr, grid, sx, st, i0, j0, clean);
    const solver::CellSystem b = solver::assemble_cell(pr, grid, sx, st, i0, j0, poisoned);
    REQUIRE(a.order == b.order);
    for (int r = 0; r < a.order; ++r) {
        CHECK(a.rhs[r] == b.rhs[r]);
        for (int c = 0; c < a.order; ++c) CHECK(a.matrix(r, c) == b.matrix(r, c));
    }
}

TEST_CASE("march is deterministic") {
    const PdaeProblem pr = example1();
    const GridSpec grid = GridSpec::make(0.0, 1.0, 0.0, 1.0, 0.1, 0.1);
    const auto [s1, r1] = march(pr, grid, 2, 2);
    const auto [s2, r2] = march(pr, grid, 2, 2);
    REQUIRE(s1.raw().size() == s2.raw().size());
    for (size_t k = 0; k < s1.raw().size(); ++k) CHECK(s1.raw()[k] == s2.raw()[k]);
    CHECK(*r1.delta_u == *r2.delta_u);
}

TEST_CASE("boundary columns of the returned grid carry the boundary data unchanged") {
    const PdaeProblem pr = example1();
    const GridSpec grid = GridSpec::make(0.0, 1.0, 0.0, 1.0, 0.25, 0.25);
    const auto [sol, report] = march(pr, grid, 2, 2);
    for (int j = 0; j <= grid.n2; ++j) {
        const Vector want = pr.psi(grid.t(j));
        const auto got = sol.node(0, j);
        for (int c = 0; c < pr.n; ++c) CHECK(got[c] == want[c]);
    }
    for (int i = 0; i <= grid.n1; ++i) {
        const Vector want = pr.phi(grid.x(i));
        const auto got = sol.node(i, 0);
        for (int c = 0; c < pr.n; ++c) CHECK(got[c] == want[c]);
    }
}

TEST_CASE("manufactured nondegenerate demo is solved to the expected accuracy") {
    const PdaeProblem pr = nondegenerate_demo();
    const GridSpec grid = GridSpec::make(0.0, 1.0, 0.0, 1.0, 0.05, 0.05);
    const auto [sol, report] = march(pr, grid, 3, 3);
    REQUIRE(report.delta_u.has_value());
    CHECK(*report.delta_u > 1e-6);
    CHECK(*report.delta_u < 2e-3);
}

TEST_CASE("error decays at the collocation order under step halving") {
    const PdaeProblem pr = example1();
    const GridSpec base = GridSpec::make(0.0, 1.0, 0.0, 1.0, 0.1, 0.1);
    const auto fit = solver::convergence_slope(pr, 2, 2, base, 2, solver::RefineAxis::Both);
    REQUIRE(fit.errors.size() == 2);
    CHECK(fit.errors[0] == doctest::Approx(1.33170e-2).epsilon(0.01));
    CHECK(fit.slope > 1.8);
    CHECK(fit.slope < 2.2);
    CHECK_FALSE(fit.exact);
}

TEST_CASE("degree validation") {
    const PdaeProblem pr = example1();
    const GridSpec tiny = GridSpec::make(0.0, 1.0, 0.0, 1.0, 0.5, 0.5);
    CHECK_THROWS_AS(march(pr, tiny, 3, 2), argument_error);
    CHECK_THROWS_AS(march(pr, tiny, 0, 2), argument_error);
    CHECK_THROWS_AS(march(pr, tiny, 2, -1), argument_error);
    const GridSpec fine = GridSpec::make(0.0, 1.0, 0.0, 1.0, 0.05, 0.05);
    CHECK_THROWS_AS(march(pr, fine, 11, 2), argument_error);
}

TEST_CASE("degenerate strip aborts the march with a located singular cell") {
    const PdaeProblem pr = singular_fixture();
    const GridSpec grid = GridSpec::make(0.0, 1.0, 0.0, 1.0, 0.1, 0.1);
    CHECK_THROWS_WITH_AS(march(pr, grid, 2, 2),
                         doctest::Contains("singular cell system at cell base"), numerical_error);
}
