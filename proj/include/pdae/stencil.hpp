// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pdae/matrix.hpp"

namespace pdae::stencil {

/// One-sided numerical-differentiation weights on the uniform nodes 0..m.
/// weight(m, s, l3) is the coefficient of the node-l3 value in the
/// approximation of the first derivative at node s:
///
///   u'(s*step) ~ (1/step) * sum_{l3=0..m} weight(m, s, l3) * u(l3*step)
///
/// equal to the derivative of the degree-m Lagrange basis polynomial for
/// node l3 evaluated at s. Computed in exact integer/rational arithmetic
/// and converted to double once.
double weight(int m, int s, int l3);

/// Weight table for degree m. gamma0 holds column 0 (the coefficients of the
/// known layer); gamma holds columns 1..m (rows s = 1..m). gamma is
/// nonsingular and each row of full_weights sums to zero.
struct StencilTable {
    int degree = 0;
    DenseMatrix full_weights;  // m x (m+1)
    Vector gamma0;             // length m
    DenseMatrix gamma;         // m x m
};

/// Builds the table for m in 1..10.
StencilTable build(int m);

/// Independent check path: the same derivative weights computed from
/// expanded Lagrange basis polynomials in double arithmetic.
Vector lagrange_derivative_row(int m, int s);

}  // namespace pdae::stencil
