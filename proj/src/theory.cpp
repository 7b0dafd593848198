// SPDX-License-Identifier: Apache-2.0
#include "pdae/theory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "pdae/errors.hpp"
#include "pdae/linalg.hpp"

namespace pdae::theory {

namespace {

Vector replicate(const Vector& x0, int m) {
    Vector y(x0.size() * static_cast<size_t>(m));
    for (int k = 0; k < m; ++k)
        for (size_t i = 0; i < x0.size(); ++i) y[k * x0.size() + i] = x0[i];
    return y;
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const size_t k = x.size();
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (size_t i = 0; i < k; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

}  // namespace

double replication_identity_residual(const stencil::StencilTable& table, const Vector& x0) {
    if (x0.empty()) throw argument_error("replication identity needs a non-empty vector");
    const int m = table.degree;
    const int d = static_cast<int>(x0.size());
    DenseMatrix g0(m, m);
    for (int i = 0; i < m; ++i) g0(i, i) = table.gamma0[i];
    const DenseMatrix ratio = linalg::lu_solve(table.gamma, g0);
    const Vector y0 = replicate(x0, m);
    const Vector z = kron(ratio, DenseMatrix::identity(d)) * y0;
    double res = 0.0;
    for (size_t i = 0; i < z.size(); ++i) res = std::max(res, std::abs(z[i] + y0[i]));
    return res;
}

double replication_identity_residual(int m, const Vector& x0) {
    return replication_identity_residual(stencil::build(m), x0);
}

OrderFit resolvent_exponential_order(const stencil::StencilTable& table, const DenseMatrix& J,
                                     const std::vector<double>& alphas) {
    if (J.rows() != J.cols() || J.rows() == 0) throw argument_error("J must be square");
    if (alphas.size() < 2) throw argument_error("order fit needs at least two alpha values");
    const int m = table.degree;
    const int d = J.rows();
    const auto xi_j = linalg::eig_small(J);
    const auto xi_g = linalg::eig_small(table.gamma);
    for (double alpha : alphas)
        for (const auto& ej : xi_j)
            for (const auto& eg : xi_g)
                if (std::abs(alpha * ej + eg) <= 1e-9)
                    throw argument_error("resolvent is singular: alpha xi_J collides with -xi_gamma");

    const DenseMatrix ginv = linalg::inverse(table.gamma);
    const Vector x0(static_cast<size_t>(d), 1.0);
    const Vector y0 = replicate(x0, m);

    OrderFit fit;
    for (double alpha : alphas) {
        const DenseMatrix resolvent =
            DenseMatrix::identity(m * d) + kron(ginv, J).scaled(alpha);
        const Vector lhs = linalg::lu_solve(resolvent, y0);
        Vector rhs(y0.size());
        for (int k = 1; k <= m; ++k) {
            const DenseMatrix ek = linalg::mat_exp(J.scaled(-alpha * k));
            const Vector w = ek * x0;
            for (int i = 0; i < d; ++i) rhs[(k - 1) * d + i] = w[i];
        }
        double res = 0.0;
        for (size_t i = 0; i < y0.size(); ++i) res = std::max(res, std::abs(lhs[i] - rhs[i]));
        fit.alphas.push_back(alpha);
        fit.residuals.push_back(res);
    }
    std::vector<double> lx, ly;
    for (size_t k = 0; k < fit.alphas.size(); ++k) {
        lx.push_back(std::log(fit.alphas[k]));
        ly.push_back(std::log(std::max(fit.residuals[k], 1e-300)));
    }
    fit.order = fit_slope(lx, ly);
    return fit;
}

OrderFit resolvent_exponential_order(int m, const DenseMatrix& J,
                                     const std::vector<double>& alphas) {
    return resolvent_exponential_order(stencil::build(m), J, alphas);
}

double gamma_min_real_eigenvalue(int m_lo, int m_hi) {
    if (m_lo < 1 || m_hi < m_lo) throw argument_error("bad degree range");
    double worst = std::numeric_limits<double>::infinity();
    for (int m = m_lo; m <= m_hi; ++m)
        for (const auto& xi : linalg::eig_small(stencil::build(m).gamma))
            worst = std::min(worst, xi.real());
    return worst;
}

std::vector<SuiteCheck> run_suite(int m_max, const TableProvider& tables) {
    if (m_max < 1) throw argument_error("m_max must be positive");
    const TableProvider provider = tables ? tables : TableProvider(&stencil::build);
    std::vector<SuiteCheck> out;

    {
        SuiteCheck c;
        c.name = "replication identity";
        std::mt19937 rng(777u);
        std::uniform_real_distribution<double> dist(-2.0, 2.0);
        double worst = 0.0;
        for (int m = 1; m <= m_max; ++m) {
            const stencil::StencilTable table = provider(m);
            for (int d = 1; d <= 3; ++d)
                for (int rep = 0; rep < 20; ++rep) {
                    Vector x0(static_cast<size_t>(d));
                    for (double& v : x0) v = dist(rng);
                    worst = std::max(worst, replication_identity_residual(table, x0));
                }
        }
        c.value = worst;
        c.pass = worst <= 1e-10;
        c.detail = "max residual " + std::to_string(worst) + " over m = 1.." +
                   std::to_string(m_max) + ", d = 1..3";
        out.push_back(std::move(c));
    }

    {
        const std::vector<double> alphas{0.1, 0.05, 0.025};
        const DenseMatrix j1(1, 1, 1.0);
        const DenseMatrix j2 = DenseMatrix::from_rows({{1.0, 0.3}, {0.0, 2.0}});
        for (int m = 1; m <= std::min(m_max, 5); ++m) {
            SuiteCheck c;
            c.name = "resolvent-exponential order, degree " + std::to_string(m);
            const OrderFit f1 = resolvent_exponential_order(provider(m), j1, alphas);
            const OrderFit f2 = resolvent_exponential_order(provider(m), j2, alphas);
            const double order = std::min(f1.order, f2.order);
            c.value = order;
            c.pass = order >= m - 0.5;
            c.detail = "fitted order " + std::to_string(order) + " (need >= " +
                       std::to_string(m - 0.5) + ")";
            out.push_back(std::move(c));
        }
    }

    {
        SuiteCheck c;
        c.name = "gamma eigenvalue positivity";
        double worst = std::numeric_limits<double>::infinity();
        int first_nonpositive = 0;
        for (int m = 1; m <= m_max; ++m) {
            double local = std::numeric_limits<double>::infinity();
            for (const auto& xi : linalg::eig_small(provider(m).gamma))
                local = std::min(local, xi.real());
            if (local <= 0.0 && first_nonpositive == 0) first_nonpositive = m;
            worst = std::min(worst, local);
        }
        c.value = worst;
        c.pass = worst > 0.0;
        c.detail = "min real part " + std::to_string(worst) + " over m = 1.." +
                   std::to_string(m_max);
        if (first_nonpositive > 0)
            c.detail += "; positive real parts hold only through degree " +
                        std::to_string(first_nonpositive - 1) +
                        ", so the sufficient stability condition does not cover higher degrees";
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace pdae::theory
