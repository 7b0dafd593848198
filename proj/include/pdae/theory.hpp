// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pdae/matrix.hpp"
#include "pdae/stencil.hpp"

namespace pdae::theory {

/// Residual of the replicated-vector identity
/// (gamma^{-1} gamma0 (x) E_d) y0 = -y0 for y0 = (x0, ..., x0) (m copies),
/// which holds exactly because every stencil row sums to zero.
double replication_identity_residual(const stencil::StencilTable& table, const Vector& x0);
double replication_identity_residual(int m, const Vector& x0);

struct OrderFit {
    double order = 0.0;
    std::vector<double> alphas;
    std::vector<double> residuals;
};

/// Accuracy order of the resolvent approximation to the matrix exponential:
/// residual R(alpha) = |(E + alpha (gamma^{-1} (x) J))^{-1} y0
///                      - diag{exp(-k alpha J)}_k y0|_inf
/// fitted against alpha. The positive sign on the resolvent side is the
/// convention used throughout this project; the replicated-vector identity
/// above makes the right-hand side +y0, and the m = 1 scalar case agrees:
/// 1/(1 + alpha) ~ exp(-alpha).
OrderFit resolvent_exponential_order(const stencil::StencilTable& table, const DenseMatrix& J,
                                     const std::vector<double>& alphas);
OrderFit resolvent_exponential_order(int m, const DenseMatrix& J,
                                     const std::vector<double>& alphas);

/// min over m in [m_lo, m_hi] of the smallest real part of the eigenvalues
/// of the gamma block; positivity underpins stability of the scheme.
double gamma_min_real_eigenvalue(int m_lo, int m_hi);

struct SuiteCheck {
    std::string name;
    bool pass = false;
    double value = 0.0;
    std::string detail;
};

using TableProvider = std::function<stencil::StencilTable(int)>;

/// Runs the full verification suite up to degree m_max. The table provider
/// seam lets tests feed corrupted weights through the real checks.
std::vector<SuiteCheck> run_suite(int m_max, const TableProvider& tables = nullptr);

}  // namespace pdae::theory
