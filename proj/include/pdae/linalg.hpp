// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <vector>

#include "pdae/matrix.hpp"

namespace pdae::linalg {

/// Solves m·x = rhs by LU with partial pivoting. Throws singular_error when a
/// pivot falls below 1e-12 times the largest initial entry of m.
Vector lu_solve(const DenseMatrix& m, const Vector& rhs);
DenseMatrix lu_solve(const DenseMatrix& m, const DenseMatrix& rhs);
DenseMatrix inverse(const DenseMatrix& m);

/// Determinant via LU; returns 0 instead of throwing on singular input.
double det(const DenseMatrix& m);

/// Numerical rank: Gaussian elimination with complete pivoting, counting
/// pivots with magnitude > tol times the largest initial pivot.
int rank(const DenseMatrix& m, double tol = 1e-8);

/// All eigenvalues of a real matrix of order <= 24: complex Hessenberg
/// reduction followed by shifted QR with deflation.
std::vector<std::complex<double>> eig_small(const DenseMatrix& m);

/// Matrix exponential by scaling-and-squaring with a Taylor kernel.
DenseMatrix mat_exp(const DenseMatrix& m);

/// Roots of a polynomial given by ascending coefficients, via the companion
/// matrix of the trimmed monic polynomial. A constant polynomial has no roots.
std::vector<std::complex<double>> poly_roots(const std::vector<double>& ascending);

}  // namespace pdae::linalg
