// SPDX-License-Identifier: Apache-2.0
#include "pdae/problem.hpp"

#include <cmath>

#include "pdae/errors.hpp"

namespace pdae {

namespace {

int span_steps(double lo, double hi, double step, const char* axis) {
    if (!(step > 0.0)) throw argument_error(std::string("grid step on ") + axis + " must be positive");
    if (!(hi > lo)) throw argument_error(std::string("grid span on ") + axis + " must be positive");
    const double span = hi - lo;
    const int n = static_cast<int>(std::lround(span / step));
    if (n < 1 || std::abs(n * step - span) > 1e-9 * span)
        throw argument_error(std::string("grid step on ") + axis + " does not divide the span");
    return n;
}

}  // namespace

GridSpec GridSpec::make(double x0, double X, double t0, double T, double h, double tau) {
    GridSpec g;
    g.x0 = x0;
    g.X = X;
    g.t0 = t0;
    g.T = T;
    g.h = h;
    g.tau = tau;
    g.n1 = span_steps(x0, X, h, "x");
    g.n2 = span_steps(t0, T, tau, "t");
    g.r = tau / h;
    return g;
}

PdaeProblem example1() {
    PdaeProblem pr;
    pr.name = "example1";
    pr.n = 6;
    pr.A = [](double x, double t) {
        DenseMatrix a(6, 6);
        a(0, 0) = 1.0;
        a(0, 3) = 1.0;
        a(1, 4) = std::exp(x * t);
        a(3, 0) = 1.0 + x * t;
        a(4, 2) = 1.0;
        return a;
    };
    pr.B = [](double x, double t) {
        DenseMatrix b(6, 6);
        b(1, 4) = std::exp(std::sin(x + t));
        b(2, 5) = 1.0;
        b(3, 0) = x * t;
        b(5, 1) = 1.0;
        return b;
    };
    pr.C = [](double x, double t) {
        DenseMatrix c(6, 6);
        c(1, 4) = 2.0 * x * t;
        c(2, 5) = x + t;
        c(3, 0) = 1.0;
        c(4, 2) = 1.0;
        return c;
    };
    // f is the image of the exact solution under the differential operator.
    pr.f = [](double x, double t) {
        const double th = x + t;
        const double eth = std::exp(th);
        const double ext = std::exp(x * t);
        return Vector{x,
                      2.0 * x * t,
                      t * ext + 1.0 + th * (ext + th),
                      x * (1.0 + t),
                      2.0 * eth,
                      t * ext};
    };
    pr.exact = [](double x, double t) {
        const double th = x + t;
        const double ext = std::exp(x * t);
        return Vector{x, ext, std::exp(th), x * t, 1.0, ext + th};
    };
    pr.psi = [ex = pr.exact](double t) { return ex(0.0, t); };
    pr.phi = [ex = pr.exact](double x) { return ex(x, 0.0); };

    CanonicalData cd;
    cd.d = 2;
    cd.l = 2;
    cd.p = 2;
    cd.P = [](double x, double t) {
        DenseMatrix p(6, 6);
        p(0, 1) = std::exp(-x * t);
        p(1, 3) = 1.0 / (1.0 + x * t);
        p(2, 2) = 1.0;
        p(3, 5) = 1.0;
        p(4, 4) = 1.0;
        p(5, 0) = 1.0;
        return p;
    };
    cd.Q = [](double, double) {
        DenseMatrix q(6, 6);
        q(0, 1) = 1.0;
        q(1, 3) = 1.0;
        q(2, 4) = 1.0;
        q(3, 1) = -1.0;
        q(3, 5) = 1.0;
        q(4, 0) = 1.0;
        q(5, 2) = 1.0;
        return q;
    };
    cd.J = [](double x, double t) {
        DenseMatrix j(2, 2);
        j(0, 0) = std::exp(std::sin(x + t) - x * t);
        j(1, 1) = x * t / (1.0 + x * t);
        return j;
    };
    pr.canonical = std::move(cd);
    return pr;
}

PdaeProblem example2() {
    PdaeProblem pr;
    pr.name = "example2";
    pr.n = 7;
    pr.A = [](double, double) {
        DenseMatrix a = DenseMatrix::identity(7);
        a(5, 5) = 0.0;
        return a;
    };
    const auto bfield = [](double x, double t) {
        const double e1 = std::exp(x + t);
        const double e2 = 1.0 + t * std::exp(x);
        DenseMatrix b(7, 7);
        b(0, 0) = e1;
        b(0, 1) = 1.0;
        b(1, 1) = e1;
        b(1, 2) = 1.0;
        b(2, 2) = e1;
        b(3, 3) = e2;
        b(3, 4) = 1.0;
        b(4, 4) = e2;
        b(5, 5) = 1.0;
        return b;
    };
    pr.B = bfield;
    pr.C = [](double x, double t) {
        const double th = x + t;
        DenseMatrix c(7, 7);
        c(0, 0) = x * x + t;
        c(0, 2) = 1.0;
        c(0, 3) = 1.0 + x * t;
        c(0, 4) = -std::exp(th);
        c(1, 1) = x * x;
        c(1, 2) = x * t;
        c(1, 5) = 1.0;
        c(1, 6) = th;
        c(2, 0) = 1.0;
        c(2, 4) = 1.0;
        c(2, 5) = x * t;
        c(3, 2) = 1.0;
        c(5, 0) = x * std::exp(th);
        c(5, 1) = 1.0;
        c(5, 2) = x * x * t;
        c(5, 4) = th;
        c(6, 2) = std::exp(th);
        c(6, 5) = 1.0;
        return c;
    };
    pr.f = [](double x, double t) {
        const double th = x + t;
        const double eth = std::exp(th);
        const double et = std::exp(t);
        const double ex = std::exp(x);
        return Vector{eth * eth + (x * x + t) * eth + 2.0 * x * t + (1.0 + x * t) * (x - t) + 1.0,
                      eth + 2.0 * t + x * x * x + x * x * t + 3.0 * x * x * t * t + x * et +
                          x * x * x * t + 1.0,
                      (2.0 * t + 1.0) * eth + 2.0 * x + x * x * t * et + 1.0,
                      2.0 * x * t + t * ex,
                      0.0,
                      x * eth * eth + et + 2.0 * th + 2.0 * x * x * x * t * t,
                      x * x + 2.0 * x * t * eth + x * et};
    };
    pr.exact = [](double x, double t) {
        return Vector{std::exp(x + t), x + t,          2.0 * x * t, x - t,
                      1.0,             x * std::exp(t), x * x * t};
    };
    pr.psi = [ex = pr.exact](double t) { return ex(0.0, t); };
    pr.phi = [ex = pr.exact](double x) { return ex(x, 0.0); };

    CanonicalData cd;
    cd.d = 5;
    cd.l = 1;
    cd.p = 1;
    cd.P = [](double, double) { return DenseMatrix::identity(7); };
    cd.Q = [](double, double) { return DenseMatrix::identity(7); };
    cd.J = [](double x, double t) {
        const double e1 = std::exp(x + t);
        const double e2 = 1.0 + t * std::exp(x);
        DenseMatrix j(5, 5);
        j(0, 0) = e1;
        j(0, 1) = 1.0;
        j(1, 1) = e1;
        j(1, 2) = 1.0;
        j(2, 2) = e1;
        j(3, 3) = e2;
        j(3, 4) = 1.0;
        j(4, 4) = e2;
        return j;
    };
    pr.canonical = std::move(cd);
    return pr;
}

PdaeProblem nondegenerate_demo() {
    PdaeProblem pr;
    pr.name = "nondegenerate_demo";
    pr.n = 2;
    pr.A = [](double, double) { return DenseMatrix::identity(2); };
    pr.B = [](double, double) { return DenseMatrix::from_rows({{2.0, 1.0}, {0.0, 1.0}}); };
    pr.C = [](double x, double t) {
        return DenseMatrix::from_rows(
            {{1.0, 0.5 * std::sin(x + t)}, {0.5 * std::cos(x * t), 2.0}});
    };
    const auto u = [](double x, double t) {
        return Vector{std::sin(x + 2.0 * t) + 1.0, std::cos(2.0 * x - t)};
    };
    const auto ut = [](double x, double t) {
        return Vector{2.0 * std::cos(x + 2.0 * t), std::sin(2.0 * x - t)};
    };
    const auto ux = [](double x, double t) {
        return Vector{std::cos(x + 2.0 * t), -2.0 * std::sin(2.0 * x - t)};
    };
    pr.exact = u;
    pr.f = [A = pr.A, B = pr.B, C = pr.C, u, ut, ux](double x, double t) {
        const Vector a = A(x, t) * ut(x, t);
        const Vector b = B(x, t) * ux(x, t);
        const Vector c = C(x, t) * u(x, t);
        Vector out(a.size());
        for (size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i] + c[i];
        return out;
    };
    pr.psi = [u](double t) { return u(0.0, t); };
    pr.phi = [u](double x) { return u(x, 0.0); };

    CanonicalData cd;
    cd.d = 2;
    cd.l = 0;
    cd.p = 0;
    cd.P = [](double, double) { return DenseMatrix::from_rows({{1.0, 1.0}, {0.0, -1.0}}); };
    cd.Q = [](double, double) { return DenseMatrix::from_rows({{1.0, 1.0}, {0.0, -1.0}}); };
    cd.J = [](double, double) { return DenseMatrix::from_rows({{2.0, 0.0}, {0.0, 1.0}}); };
    pr.canonical = std::move(cd);
    return pr;
}

PdaeProblem singular_fixture() {
    PdaeProblem pr;
    pr.name = "singular_fixture";
    pr.n = 1;
    pr.A = [](double x, double) { return DenseMatrix(1, 1, x < 0.45 ? 1.0 : 0.0); };
    pr.B = [](double, double) { return DenseMatrix(1, 1, 0.0); };
    pr.C = [](double, double) { return DenseMatrix(1, 1, 0.0); };
    pr.f = [](double, double) { return Vector{0.0}; };
    pr.psi = [](double) { return Vector{0.0}; };
    pr.phi = [](double) { return Vector{0.0}; };
    return pr;
}

}  // namespace pdae
