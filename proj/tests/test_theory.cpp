// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "pdae/errors.hpp"
#include "pdae/stencil.hpp"
#include "pdae/theory.hpp"

using namespace pdae;
using theory::gamma_min_real_eigenvalue;
using theory::replication_identity_residual;
using theory::resolvent_exponential_order;

TEST_CASE("replicated-vector identity is exact for every degree") {
    const Vector fixed{0.7, -0.3};
    for (int m = 1; m <= 8; ++m) CHECK(replication_identity_residual(m, fixed) <= 1e-12);

    std::mt19937 rng(31u);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    double worst = 0.0;
    for (int m = 1; m <= 8; ++m)
        for (int d = 1; d <= 3; ++d)
            for (int rep = 0; rep < 20; ++rep) {
                Vector x0(static_cast<size_t>(d));
                for (double& v : x0) v = dist(rng);
                worst = std::max(worst, replication_identity_residual(m, x0));
            }
    CHECK(worst <= 1e-10);

    const Vector zero{0.0, 0.0};
    CHECK(replication_identity_residual(4, zero) == 0.0);
    CHECK(replication_identity_residual(stencil::build(3), fixed) ==
          replication_identity_residual(3, fixed));
    CHECK_THROWS_AS(replication_identity_residual(2, Vector{}), argument_error);
}

TEST_CASE("resolvent approximates the exponential block at the collocation order") {
    const std::vector<double> alphas{0.04, 0.02, 0.01, 0.005};
    const DenseMatrix j = DenseMatrix::from_rows({{1.0, 0.3}, {0.0, 2.0}});
    for (int m = 1; m <= 5; ++m) {
        const theory::OrderFit fit = resolvent_exponential_order(m, j, alphas);
        CHECK(fit.order >= m - 0.5);
        CHECK(fit.order <= m + 1.5);
        REQUIRE(fit.residuals.size() == alphas.size());
        CHECK(fit.residuals.back() < fit.residuals.front());
    }
}

TEST_CASE("scalar degree-1 case reproduces the closed-form residual") {
    const theory::OrderFit fit =
        resolvent_exponential_order(1, DenseMatrix(1, 1, 1.0), {0.01, 0.005});
    const double closed_form = std::abs(1.0 / 1.01 - std::exp(-0.01));
    CHECK(fit.residuals[0] == doctest::Approx(closed_form).epsilon(1e-12));
    CHECK(fit.residuals[0] == doctest::Approx(4.95e-5).epsilon(0.02));
}

TEST_CASE("zero coefficient matrix makes both sides the replicated vector") {
    const theory::OrderFit fit =
        resolvent_exponential_order(3, DenseMatrix(2, 2, 0.0), {0.1, 0.05});
    CHECK(fit.residuals[0] == 0.0);
    CHECK(fit.residuals[1] == 0.0);
}

TEST_CASE("gamma-block eigenvalue real parts: positive through degree 5, negative after") {
    // The positive-real-part property of the weight blocks stops at degree 5:
    // in exact arithmetic the Routh array of det(sE + gamma_m) keeps all
    // characteristic coefficients positive for every m but shows a sign
    // change from m = 6, and the numerical minima below confirm it.
    CHECK(gamma_min_real_eigenvalue(1, 1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(gamma_min_real_eigenvalue(2, 2) == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(gamma_min_real_eigenvalue(3, 3) == doctest::Approx(0.48672424).epsilon(1e-6));
    CHECK(gamma_min_real_eigenvalue(4, 4) == doctest::Approx(0.26456634).epsilon(1e-6));
    CHECK(gamma_min_real_eigenvalue(5, 5) == doctest::Approx(0.07774569).epsilon(1e-6));
    CHECK(gamma_min_real_eigenvalue(1, 5) > 0.0);
    CHECK(gamma_min_real_eigenvalue(6, 6) == doctest::Approx(-0.08200593).epsilon(1e-6));
    CHECK(gamma_min_real_eigenvalue(7, 7) == doctest::Approx(-0.22099685).epsilon(1e-6));
    CHECK(gamma_min_real_eigenvalue(8, 8) == doctest::Approx(-0.34375332).epsilon(1e-6));
    CHECK(gamma_min_real_eigenvalue(1, 8) == doctest::Approx(-0.34375332).epsilon(1e-6));
}

TEST_CASE("full suite passes over the degrees where every property holds") {
    const auto checks = theory::run_suite(5);
    REQUIRE(checks.size() == 7);
    for (const auto& c : checks) {
        INFO(c.name << ": " << c.detail);
        CHECK(c.pass);
    }
}

TEST_CASE("suite over degrees 1..8 reports exactly the eigenvalue check as failed") {
    const auto checks = theory::run_suite(8);
    REQUIRE(checks.size() == 7);
    int failed = 0;
    for (const auto& c : checks) {
        if (c.pass) continue;
        ++failed;
        CHECK(c.name == "gamma eigenvalue positivity");
        CHECK(c.value == doctest::Approx(-0.34375332).epsilon(1e-6));
        CHECK(c.detail.find("through degree 5") != std::string::npos);
    }
    CHECK(failed == 1);
}

TEST_CASE("corrupted weight tables are caught by the suite") {
    const theory::TableProvider corrupted = [](int m) {
        stencil::StencilTable table = stencil::build(m);
        if (m == 2) table.gamma(0, 0) += 0.05;  // breaks the zero row sums
        return table;
    };
    const auto checks = theory::run_suite(3, corrupted);
    bool replication_failed = false;
    for (const auto& c : checks)
        if (c.name == "replication identity") replication_failed = !c.pass;
    CHECK(replication_failed);
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(theory::run_suite(0), argument_error);
    CHECK_THROWS_AS(gamma_min_real_eigenvalue(0, 3), argument_error);
    CHECK_THROWS_AS(gamma_min_real_eigenvalue(3, 2), argument_error);
    CHECK_THROWS_AS(resolvent_exponential_order(2, DenseMatrix(2, 3, 0.0), {0.1, 0.05}),
                    argument_error);
    CHECK_THROWS_AS(resolvent_exponential_order(2, DenseMatrix::identity(2), {0.1}),
                    argument_error);
    // alpha * xi_J = -xi_gamma: degree 1 has the single eigenvalue 1.
    CHECK_THROWS_AS(resolvent_exponential_order(1, DenseMatrix(1, 1, -2.0), {0.5, 0.25}),
                    argument_error);
}
