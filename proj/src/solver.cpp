// SPDX-License-Identifier: Apache-2.0
#include "pdae/solver.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <string>

#include "pdae/errors.hpp"
#include "pdae/linalg.hpp"

namespace pdae::solver {

namespace {

std::string node_str(int i, int j) {
    return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

void check_field(const DenseMatrix& m, int n, const char* what, int i, int j) {
    if (m.rows() != n || m.cols() != n)
        throw argument_error(std::string(what) + " evaluator returned wrong dimensions at node " +
                             node_str(i, j));
}

double fit_slope(const std::vector<double>& logx, const std::vector<double>& logy) {
    const size_t k = logx.size();
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (size_t i = 0; i < k; ++i) {
        sx += logx[i];
        sy += logy[i];
        sxx += logx[i] * logx[i];
        sxy += logx[i] * logy[i];
    }
    return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

}  // namespace

SolutionGrid::SolutionGrid(int n1, int n2, int n) : n1_(n1), n2_(n2), n_(n) {
    if (n1 < 1 || n2 < 1 || n < 1) throw argument_error("solution grid dimensions must be positive");
    values_.assign(static_cast<size_t>(n1 + 1) * (n2 + 1) * n, 0.0);
    mask_.assign(static_cast<size_t>(n1 + 1) * (n2 + 1), 0);
}

std::span<const double> SolutionGrid::node(int i, int j) const {
    return {values_.data() + index(i, j) * n_, static_cast<size_t>(n_)};
}

void SolutionGrid::set(int i, int j, std::span<const double> values) {
    if (static_cast<int>(values.size()) != n_) throw argument_error("node value size mismatch");
    double* dst = values_.data() + index(i, j) * n_;
    for (int k = 0; k < n_; ++k) dst[k] = values[k];
    mask_[index(i, j)] = 1;
}

bool SolutionGrid::all_filled() const noexcept {
    for (unsigned char m : mask_)
        if (!m) return false;
    return true;
}

CellSystem assemble_cell(const PdaeProblem& pr, const GridSpec& grid,
                         const stencil::StencilTable& sx, const stencil::StencilTable& st,
                         int i, int j, const SolutionGrid& sol) {
    const int m1 = sx.degree;
    const int m2 = st.degree;
    const int n = pr.n;
    if (i < 0 || j < 0 || i + m1 > grid.n1 || j + m2 > grid.n2)
        throw argument_error("cell " + node_str(i, j) + " does not fit inside the grid");
    for (int l1 = 1; l1 <= m1; ++l1)
        if (!sol.filled(i + l1, j))
            throw argument_error("cell " + node_str(i, j) + " needs unfilled node " +
                                 node_str(i + l1, j));
    for (int l2 = 1; l2 <= m2; ++l2)
        if (!sol.filled(i, j + l2))
            throw argument_error("cell " + node_str(i, j) + " needs unfilled node " +
                                 node_str(i, j + l2));

    CellSystem cell;
    cell.order = m1 * m2 * n;
    cell.matrix = DenseMatrix(cell.order, cell.order);
    cell.rhs = Vector(static_cast<size_t>(cell.order), 0.0);
    cell.node_map.reserve(static_cast<size_t>(m1) * m2);
    for (int l1 = 1; l1 <= m1; ++l1)
        for (int l2 = 1; l2 <= m2; ++l2) cell.node_map.emplace_back(i + l1, j + l2);

    const auto block = [&](int l1, int l2) { return ((l1 - 1) * m2 + (l2 - 1)) * n; };
    const double inv_h = 1.0 / grid.h;
    const double inv_tau = 1.0 / grid.tau;

    for (int l1 = 1; l1 <= m1; ++l1)
        for (int l2 = 1; l2 <= m2; ++l2) {
            const double x = grid.x(i + l1);
            const double t = grid.t(j + l2);
            const DenseMatrix a = pr.A(x, t);
            const DenseMatrix b = pr.B(x, t);
            const DenseMatrix c = pr.C(x, t);
            check_field(a, n, "A", i + l1, j + l2);
            check_field(b, n, "B", i + l1, j + l2);
            check_field(c, n, "C", i + l1, j + l2);
            const Vector fv = pr.f(x, t);
            if (static_cast<int>(fv.size()) != n)
                throw argument_error("f evaluator returned wrong dimensions at node " +
                                     node_str(i + l1, j + l2));
            const int rb = block(l1, l2);
            for (int l3 = 1; l3 <= m2; ++l3) {
                const double w = inv_tau * st.gamma(l2 - 1, l3 - 1);
                if (w == 0.0) continue;
                const int cb = block(l1, l3);
                for (int p = 0; p < n; ++p)
                    for (int q = 0; q < n; ++q) cell.matrix(rb + p, cb + q) += w * a(p, q);
            }
            for (int l3 = 1; l3 <= m1; ++l3) {
                const double w = inv_h * sx.gamma(l1 - 1, l3 - 1);
                if (w == 0.0) continue;
                const int cb = block(l3, l2);
                for (int p = 0; p < n; ++p)
                    for (int q = 0; q < n; ++q) cell.matrix(rb + p, cb + q) += w * b(p, q);
            }
            {
                const int cb = block(l1, l2);
                for (int p = 0; p < n; ++p)
                    for (int q = 0; q < n; ++q) cell.matrix(rb + p, cb + q) += c(p, q);
            }
            const auto bottom = sol.node(i + l1, j);
            const auto left = sol.node(i, j + l2);
            const double wa = inv_tau * st.gamma0[l2 - 1];
            const double wb = inv_h * sx.gamma0[l1 - 1];
            for (int p = 0; p < n; ++p) {
                double s = fv[p];
                for (int q = 0; q < n; ++q)
                    s -= wa * a(p, q) * bottom[q] + wb * b(p, q) * left[q];
                cell.rhs[rb + p] = s;
            }
        }
    return cell;
}

std::vector<Vector> solve_cell(const CellSystem& cell) {
    const Vector x = linalg::lu_solve(cell.matrix, cell.rhs);
    const int n = cell.order / static_cast<int>(cell.node_map.size());
    std::vector<Vector> out(cell.node_map.size());
    for (size_t k = 0; k < cell.node_map.size(); ++k)
        out[k] = Vector(x.begin() + k * n, x.begin() + (k + 1) * n);
    return out;
}

std::pair<SolutionGrid, SolveReport> march(const PdaeProblem& pr, const GridSpec& grid, int m1,
                                           int m2) {
    if (m1 < 1 || m2 < 1) throw argument_error("cell degrees must be positive");
    if (m1 > grid.n1 || m2 > grid.n2)
        throw argument_error("cell degrees exceed the grid size (m1 <= n1 and m2 <= n2 required)");
    const auto start = std::chrono::steady_clock::now();
    const stencil::StencilTable sx = stencil::build(m1);
    const stencil::StencilTable st = stencil::build(m2);

    // Two-layer march: the cell base slides one node at a time in x and t, so
    // every kept value is the first collocation node of its own cell; values a
    // cell writes further up/right are scratch, overwritten by later cells.
    // Cells based next to the far boundaries overhang it by up to m-1 steps,
    // so coefficients and boundary data are sampled on that margin; the
    // overhanging scratch nodes live on an extended working grid and are
    // discarded from the returned solution.
    GridSpec ext = grid;
    ext.n1 = grid.n1 + (m1 - 1);
    ext.n2 = grid.n2 + (m2 - 1);
    ext.X = grid.x(ext.n1);
    ext.T = grid.t(ext.n2);

    SolveReport report;
    SolutionGrid sol(ext.n1, ext.n2, pr.n);
    for (int i = 0; i <= ext.n1; ++i) {
        const Vector v = pr.phi(ext.x(i));
        if (static_cast<int>(v.size()) != pr.n) throw argument_error("phi returned wrong dimension");
        sol.set(i, 0, v);
    }
    for (int j = 0; j <= ext.n2; ++j) {
        const Vector v = pr.psi(ext.t(j));
        if (static_cast<int>(v.size()) != pr.n) throw argument_error("psi returned wrong dimension");
        sol.set(0, j, v);
    }
    {
        const Vector a = pr.psi(grid.t0);
        const Vector b = pr.phi(grid.x0);
        double diff = 0.0;
        for (int k = 0; k < pr.n; ++k) diff = std::max(diff, std::abs(a[k] - b[k]));
        if (diff > 1e-9)
            report.warnings.push_back("corner data mismatch |psi(t0) - phi(x0)| = " +
                                      std::to_string(diff));
    }

    for (int j0 = 0; j0 < grid.n2; ++j0) {
        for (int i0 = 0; i0 < grid.n1; ++i0) {
            const CellSystem cell = assemble_cell(pr, ext, sx, st, i0, j0, sol);
            std::vector<Vector> values;
            try {
                values = solve_cell(cell);
            } catch (const singular_error& e) {
                throw numerical_error(
                    "singular cell system at cell base " + std::to_string(i0) + ", " +
                    std::to_string(j0) + " (pivot index " + std::to_string(e.pivot_index()) +
                    "); the pencil eigenvalue separation condition likely fails here");
            }
            for (size_t k = 0; k < values.size(); ++k) {
                for (double v : values[k])
                    if (!std::isfinite(v))
                        throw numerical_error("non-finite value at node (" +
                                              std::to_string(cell.node_map[k].first) + ", " +
                                              std::to_string(cell.node_map[k].second) +
                                              "); the march is unstable on this grid");
                sol.set(cell.node_map[k].first, cell.node_map[k].second, values[k]);
            }
            ++report.cells_solved;
        }
    }

    SolutionGrid out(grid.n1, grid.n2, pr.n);
    for (int j = 0; j <= grid.n2; ++j)
        for (int i = 0; i <= grid.n1; ++i) {
            const auto v = sol.node(i, j);
            out.set(i, j, v);
            for (double c : v)
                report.max_solution_norm = std::max(report.max_solution_norm, std::abs(c));
        }
    if (pr.exact) report.delta_u = error_norm(out, pr, grid);
    report.wall_time_sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {std::move(out), std::move(report)};
}

double error_norm(const SolutionGrid& sol, const PdaeProblem& pr, const GridSpec& grid) {
    if (!pr.exact) throw unsupported_error("error_norm requires an exact solution");
    if (!sol.all_filled()) throw argument_error("error_norm requires a fully filled grid");
    double err = 0.0;
    for (int j = 0; j <= grid.n2; ++j)
        for (int i = 0; i <= grid.n1; ++i) {
            const Vector u = pr.exact(grid.x(i), grid.t(j));
            const auto v = sol.node(i, j);
            for (int k = 0; k < pr.n; ++k) err = std::max(err, std::abs(v[k] - u[k]));
        }
    return err;
}

ConvergenceResult convergence_slope(const PdaeProblem& pr, int m1, int m2, const GridSpec& base,
                                    int refinements, RefineAxis axis) {
    if (refinements < 2) throw argument_error("convergence fit needs at least two refinements");
    if (!pr.exact) throw unsupported_error("convergence fit requires an exact solution");
    ConvergenceResult res;
    for (int k = 0; k < refinements; ++k) {
        const double scale = std::ldexp(1.0, k);
        const double h = (axis != RefineAxis::T) ? base.h / scale : base.h;
        const double tau = (axis != RefineAxis::X) ? base.tau / scale : base.tau;
        const GridSpec g = GridSpec::make(base.x0, base.X, base.t0, base.T, h, tau);
        const auto [sol, rep] = march(pr, g, m1, m2);
        res.steps.push_back(axis == RefineAxis::T ? tau : h);
        res.errors.push_back(*rep.delta_u);
    }
    double mx = 0.0;
    for (double e : res.errors) mx = std::max(mx, e);
    if (mx <= 1e-14) {
        res.exact = true;
        res.slope = std::numeric_limits<double>::quiet_NaN();
        return res;
    }
    std::vector<double> lx, ly;
    for (size_t k = 0; k < res.steps.size(); ++k) {
        lx.push_back(std::log(res.steps[k]));
        ly.push_back(std::log(std::max(res.errors[k], 1e-300)));
    }
    res.slope = fit_slope(lx, ly);
    return res;
}

}  // namespace pdae::solver
