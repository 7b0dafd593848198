// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "pdae/problem.hpp"

namespace pdae::pencil {

/// Ascending coefficients of det(A + lambda B) at (x, t), recovered from
/// values at Chebyshev-spaced lambda samples on [-2, 2]; trailing
/// coefficients below 1e-9 of the largest are trimmed.
std::vector<double> char_poly(const PdaeProblem& pr, double x, double t);

struct RootCluster {
    std::complex<double> value;
    int multiplicity = 0;
};

/// Roots of the characteristic polynomial clustered within cluster_tol.
std::vector<RootCluster> char_roots(const PdaeProblem& pr, double x, double t,
                                    double cluster_tol = 1e-6);

struct SamplePoint {
    double x = 0.0, t = 0.0;
};

struct TriplePoint {
    double x = 0.0, t = 0.0, lambda = 0.0;
};

/// Checks rank B = deg det(A + lambda B) and, in the swapped pencil,
/// rank A = deg det(B + lambda A) at every sample; these force the
/// nilpotent canonical blocks to vanish.
std::pair<bool, bool> rank_degree_check(const PdaeProblem& pr,
                                        const std::vector<SamplePoint>& samples,
                                        double rank_tol = 1e-8);

/// Max over triples of |P(A + lambda B)Q - canonical pencil|_inf.
double canonical_equivalence_residual(const PdaeProblem& pr,
                                      const std::vector<TriplePoint>& triples);

std::vector<TriplePoint> random_triples(double x_lo, double x_hi, double t_lo, double t_hi,
                                        int count, unsigned seed);

/// Cell nonsingularity margin: min over samples and eigenvalue triples of
/// |r xi_gammabar xi_J + xi_gamma|. +infinity when the problem has no
/// differential block.
double min_eigen_separation(const PdaeProblem& pr, double r, int m1, int m2,
                            const std::vector<SamplePoint>& samples);

/// Stability indicator max |exp(-k r xi_gammabar xi_J)|, k = 1..m2.
double mu_spectral_radius(const PdaeProblem& pr, double r, int m1, int m2,
                          const std::vector<SamplePoint>& samples);

struct PencilSample {
    double x = 0.0, t = 0.0;
    int rank_a = 0, rank_b = 0, degree = 0;
    std::vector<RootCluster> roots;
    bool rank_degree_b = false, rank_degree_a = false;
};

struct PencilReport {
    std::vector<PencilSample> samples;
    bool rank_degree_b = false, rank_degree_a = false;
    bool multiplicity_constant = false;
    std::optional<double> min_separation;
    std::optional<double> mu;
    std::optional<double> xi_j_min;  // smallest real part of J eigenvalues
    std::optional<double> canonical_residual;
};

/// Full diagnostic pass over an interior lattice of sample_count points.
PencilReport analyze(const PdaeProblem& pr, double x0, double X, double t0, double T, double r,
                     int m1, int m2, int sample_count, unsigned seed = 20240901u);

}  // namespace pdae::pencil
