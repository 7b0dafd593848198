// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "pdae/errors.hpp"
#include "pdae/pencil.hpp"
#include "pdae/problem.hpp"

using namespace pdae;

namespace {

std::vector<pencil::SamplePoint> lattice3x3() {
    std::vector<pencil::SamplePoint> samples;
    for (double x : {0.25, 0.5, 0.75})
        for (double t : {0.25, 0.5, 0.75}) samples.push_back({x, t});
    return samples;
}

std::vector<pencil::RootCluster> sorted_by_real(std::vector<pencil::RootCluster> roots) {
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.value.real() < b.value.real(); });
    return roots;
}

}  // namespace

TEST_CASE("six-component system: characteristic roots at (1,1)") {
    const PdaeProblem pr = example1();
    const std::vector<double> poly = pencil::char_poly(pr, 1.0, 1.0);
    CHECK(poly.size() == 5);  // degree 4 = rank B

    const auto roots = sorted_by_real(pencil::char_roots(pr, 1.0, 1.0));
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].value.real() == doctest::Approx(-2.0).epsilon(1e-8));
    CHECK(roots[0].multiplicity == 1);
    CHECK(roots[1].value.real() ==
          doctest::Approx(-std::exp(1.0 - std::sin(2.0))).epsilon(1e-8));
    CHECK(roots[1].multiplicity == 1);
    CHECK(std::abs(roots[2].value) <= 1e-6);
    CHECK(roots[2].multiplicity == 2);
    int total = 0;
    for (const auto& rc : roots) total += rc.multiplicity;
    CHECK(total == 4);
}

TEST_CASE("seven-component system: root multiplicities at (1,1)") {
    const PdaeProblem pr = example2();
    const std::vector<double> poly = pencil::char_poly(pr, 1.0, 1.0);
    CHECK(poly.size() == 7);  // degree 6 = d + l

    // A triple root is recovered from coefficient noise only to its cube
    // root, so multiplicity detection needs the coarser clustering radius.
    const auto roots = sorted_by_real(pencil::char_roots(pr, 1.0, 1.0, 1e-2));
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].value.real() == doctest::Approx(-1.0 / (1.0 + std::exp(1.0))).epsilon(1e-6));
    CHECK(roots[0].multiplicity == 2);
    CHECK(roots[1].value.real() == doctest::Approx(-std::exp(-2.0)).epsilon(1e-4));
    CHECK(roots[1].multiplicity == 3);
    CHECK(std::abs(roots[2].value) <= 1e-6);
    CHECK(roots[2].multiplicity == 1);
}

TEST_CASE("characteristic degree equals d + l at interior samples of the canonical system") {
    const PdaeProblem pr = example2();
    for (double x : {0.1, 0.3, 0.5, 0.7, 0.9})
        for (double t : {0.25, 0.75}) CHECK(pencil::char_poly(pr, x, t).size() == 7);
}

TEST_CASE("roots are invariant under constant equivalence transformations") {
    const PdaeProblem base = example1();
    const DenseMatrix p = DenseMatrix::identity(6) + DenseMatrix(6, 6, 0.05);
    const DenseMatrix q = DenseMatrix::identity(6) - DenseMatrix(6, 6, 0.03);
    PdaeProblem twisted = base;
    twisted.A = [&base, p, q](double x, double t) { return p * base.A(x, t) * q; };
    twisted.B = [&base, p, q](double x, double t) { return p * base.B(x, t) * q; };

    const auto r1 = sorted_by_real(pencil::char_roots(base, 0.6, 0.8, 1e-3));
    const auto r2 = sorted_by_real(pencil::char_roots(twisted, 0.6, 0.8, 1e-3));
    REQUIRE(r1.size() == r2.size());
    for (size_t k = 0; k < r1.size(); ++k) {
        CHECK(r1[k].multiplicity == r2[k].multiplicity);
        CHECK(std::abs(r1[k].value - r2[k].value) <= 1e-5);
    }
    CHECK(pencil::char_poly(base, 0.6, 0.8).size() ==
          pencil::char_poly(twisted, 0.6, 0.8).size());
}

TEST_CASE("rank-degree criteria hold for both bundled degenerate systems") {
    const auto samples = lattice3x3();
    const auto [b1, a1] = pencil::rank_degree_check(example1(), samples);
    CHECK(b1);
    CHECK(a1);
    const auto [b2, a2] = pencil::rank_degree_check(example2(), samples);
    CHECK(b2);
    CHECK(a2);
}

TEST_CASE("canonical equivalence residual is roundoff for correct data, large for wrong data") {
    const auto triples = pencil::random_triples(0.0, 1.0, 0.0, 1.0, 20, 99u);
    CHECK(pencil::canonical_equivalence_residual(example1(), triples) <= 1e-10);
    CHECK(pencil::canonical_equivalence_residual(example2(), triples) <= 1e-14);

    PdaeProblem broken = example1();
    const CanonicalData good = *broken.canonical;
    CanonicalData bad = good;
    bad.Q = [&good](double x, double t) {
        DenseMatrix q = good.Q(x, t);
        q(0, 1) += 0.01;
        return q;
    };
    broken.canonical = bad;
    CHECK(pencil::canonical_equivalence_residual(broken, triples) > 1e-6);
}

TEST_CASE("random triples are deterministic for a fixed seed and stay in bounds") {
    const auto a = pencil::random_triples(0.0, 1.0, 0.5, 2.0, 8, 7u);
    const auto b = pencil::random_triples(0.0, 1.0, 0.5, 2.0, 8, 7u);
    REQUIRE(a.size() == 8);
    for (size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k].x == b[k].x);
        CHECK(a[k].t == b[k].t);
        CHECK(a[k].lambda == b[k].lambda);
        CHECK(a[k].x >= 0.0);
        CHECK(a[k].x <= 1.0);
        CHECK(a[k].t >= 0.5);
        CHECK(a[k].t <= 2.0);
    }
}

TEST_CASE("eigenvalue separation and contraction factor on the six-component system") {
    const auto samples = lattice3x3();
    const PdaeProblem pr = example1();
    const double sep = pencil::min_eigen_separation(pr, 1.0, 2, 2, samples);
    CHECK(sep == doctest::Approx(1.00904).epsilon(1e-3));
    const double mu = pencil::mu_spectral_radius(pr, 1.0, 2, 2, samples);
    CHECK(mu == doctest::Approx(0.956841).epsilon(1e-3));
    CHECK(mu < 1.0);
}

TEST_CASE("contraction is stronger on the seven-component system") {
    const auto samples = lattice3x3();
    const PdaeProblem pr = example2();
    CHECK(pencil::min_eigen_separation(pr, 1.0, 2, 2, samples) ==
          doctest::Approx(1.75366).epsilon(1e-3));
    const double mu = pencil::mu_spectral_radius(pr, 1.0, 2, 2, samples);
    CHECK(mu == doctest::Approx(0.371296).epsilon(1e-3));
    CHECK(mu < 1.0);
}

TEST_CASE("full analysis report on the six-component system") {
    const pencil::PencilReport rep =
        pencil::analyze(example1(), 0.0, 1.0, 0.0, 1.0, 1.0, 2, 2, 9);
    CHECK(rep.samples.size() == 9);
    CHECK(rep.rank_degree_b);
    CHECK(rep.rank_degree_a);
    CHECK(rep.multiplicity_constant);
    REQUIRE(rep.min_separation.has_value());
    CHECK(*rep.min_separation == doctest::Approx(1.00904).epsilon(1e-3));
    REQUIRE(rep.mu.has_value());
    CHECK(*rep.mu < 1.0);
    REQUIRE(rep.xi_j_min.has_value());
    CHECK(*rep.xi_j_min == doctest::Approx(0.0588235).epsilon(1e-4));
    REQUIRE(rep.canonical_residual.has_value());
    CHECK(*rep.canonical_residual <= 1e-10);
    for (const auto& s : rep.samples) {
        CHECK(s.rank_a == 4);
        CHECK(s.rank_b == 4);
        CHECK(s.degree == 4);
        CHECK(s.rank_degree_b);
        CHECK(s.rank_degree_a);
    }
}

TEST_CASE("analysis works on the nondegenerate demo as well") {
    const pencil::PencilReport rep =
        pencil::analyze(nondegenerate_demo(), 0.0, 1.0, 0.0, 1.0, 1.0, 2, 2, 4);
    CHECK(rep.rank_degree_b);
    CHECK(rep.rank_degree_a);
    CHECK(rep.mu.has_value());
}

TEST_CASE("validation and degenerate-point behavior") {
    CHECK_THROWS_AS(pencil::analyze(example1(), 0.0, 1.0, 0.0, 1.0, 1.0, 2, 2, 0),
                    argument_error);
    // The fault fixture's pencil vanishes identically on its singular strip.
    CHECK_THROWS_AS(pencil::char_poly(singular_fixture(), 0.5, 0.5), numerical_error);
}
