// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pdae/problem.hpp"
#include "pdae/stencil.hpp"

namespace pdae::solver {

/// Node values on the full grid, (n1+1) x (n2+1) vectors of length n.
class SolutionGrid {
public:
    SolutionGrid() = default;
    SolutionGrid(int n1, int n2, int n);

    int n1() const noexcept { return n1_; }
    int n2() const noexcept { return n2_; }
    int n() const noexcept { return n_; }

    bool filled(int i, int j) const { return mask_[index(i, j)] != 0; }
    std::span<const double> node(int i, int j) const;
    void set(int i, int j, std::span<const double> values);

    bool all_filled() const noexcept;
    const std::vector<double>& raw() const noexcept { return values_; }

private:
    size_t index(int i, int j) const { return static_cast<size_t>(j) * (n1_ + 1) + i; }
    int n1_ = 0, n2_ = 0, n_ = 0;
    std::vector<double> values_;
    std::vector<unsigned char> mask_;
};

/// Linear system of one collocation cell based at grid node (i, j).
/// Unknowns are the nodes (i+l1, j+l2), l1 = 1..m1, l2 = 1..m2, ordered
/// l1-major; node_map records the grid index of each unknown block.
struct CellSystem {
    int order = 0;  // m1 * m2 * n
    DenseMatrix matrix;
    Vector rhs;
    std::vector<std::pair<int, int>> node_map;
};

struct SolveReport {
    std::optional<double> delta_u;
    double max_solution_norm = 0.0;
    long cells_solved = 0;
    double wall_time_sec = 0.0;
    std::vector<std::string> warnings;
};

CellSystem assemble_cell(const PdaeProblem& pr, const GridSpec& grid,
                         const stencil::StencilTable& sx, const stencil::StencilTable& st,
                         int i, int j, const SolutionGrid& sol);

/// Node values of the solved cell, in node_map order.
std::vector<Vector> solve_cell(const CellSystem& cell);

/// Marches the two-layer scheme over the grid: boundary data from psi/phi,
/// then the cell base slides one node at a time in x and in t, later cells
/// overwriting the scratch values of earlier ones, so every kept value is the
/// first collocation node of its own cell. Cells based next to the far
/// boundaries overhang them, so A, B, C, f, psi, phi must be evaluable up to
/// m1-1 steps beyond X and m2-1 steps beyond T; overhanging nodes are
/// discarded from the returned grid.
std::pair<SolutionGrid, SolveReport> march(const PdaeProblem& pr, const GridSpec& grid, int m1,
                                           int m2);

/// Grid error max_(i,j) |v_ij - u(x_i, t_j)|_inf; requires an exact solution.
double error_norm(const SolutionGrid& sol, const PdaeProblem& pr, const GridSpec& grid);

enum class RefineAxis { X, T, Both };

struct ConvergenceResult {
    double slope = 0.0;
    bool exact = false;
    std::vector<double> steps;
    std::vector<double> errors;
};

/// Least-squares fitted order of accuracy over successive step halvings.
ConvergenceResult convergence_slope(const PdaeProblem& pr, int m1, int m2, const GridSpec& base,
                                    int refinements, RefineAxis axis);

}  // namespace pdae::solver
