// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <optional>
#include <string>

#include "pdae/matrix.hpp"

namespace pdae {

/// Uniform rectangular grid on [x0, X] x [t0, T]. Step counts are derived
/// from the step sizes and must divide the spans to within 1e-9 relative.
struct GridSpec {
    double x0 = 0.0, X = 1.0, t0 = 0.0, T = 1.0;
    double h = 0.1, tau = 0.1;
    int n1 = 0, n2 = 0;
    double r = 1.0;  // tau / h

    static GridSpec make(double x0, double X, double t0, double T, double h, double tau);

    double x(int i) const { return x0 + i * h; }
    double t(int j) const { return t0 + j * tau; }
};

using MatrixField = std::function<DenseMatrix(double, double)>;
using VectorField = std::function<Vector(double, double)>;
using BoundaryFn = std::function<Vector(double)>;

/// Smooth equivalence data: P(x,t) (A + lambda B) Q(x,t) equals the canonical
/// pencil diag{E_d, M, E_p} + lambda diag{J, E_l, N}. Null M or N evaluators
/// mean the block is identically zero; J is null when d = 0.
struct CanonicalData {
    int d = 0, l = 0, p = 0;
    MatrixField P, Q;
    MatrixField J;
    MatrixField M, N;
};

/// First-order linear system A u_t + B u_x + C u = f with u(x0, t) = psi(t)
/// and u(x, t0) = phi(x). A and B are singular everywhere for the degenerate
/// examples; exact and canonical are optional.
struct PdaeProblem {
    std::string name;
    int n = 0;
    MatrixField A, B, C;
    VectorField f;
    BoundaryFn psi, phi;
    VectorField exact;
    std::optional<CanonicalData> canonical;
};

/// 6x6 degenerate test system with a two-dimensional differential block.
PdaeProblem example1();

/// 7x7 degenerate test system already in canonical form (P = Q = identity).
PdaeProblem example2();

/// 2x2 nondegenerate strictly hyperbolic system with a manufactured solution.
PdaeProblem nondegenerate_demo();

/// Fault-injection fixture: A = B = C = 0 for x >= 0.45, so any collocation
/// cell touching that strip assembles a singular system.
PdaeProblem singular_fixture();

}  // namespace pdae
