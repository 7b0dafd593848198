// SPDX-License-Identifier: Apache-2.0
#include "pdae/pencil.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "pdae/errors.hpp"
#include "pdae/linalg.hpp"
#include "pdae/stencil.hpp"

namespace pdae::pencil {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<double> pencil_poly(const MatrixField& first, const MatrixField& second, int n,
                                double x, double t) {
    const int pts = n + 1;
    std::vector<double> lambdas(static_cast<size_t>(pts));
    for (int k = 0; k < pts; ++k)
        lambdas[k] = 2.0 * std::cos(kPi * (2.0 * k + 1.0) / (2.0 * pts));
    DenseMatrix vand(pts, pts);
    Vector dets(static_cast<size_t>(pts));
    const DenseMatrix a = first(x, t);
    const DenseMatrix b = second(x, t);
    for (int k = 0; k < pts; ++k) {
        dets[k] = linalg::det(a + b.scaled(lambdas[k]));
        double p = 1.0;
        for (int j = 0; j < pts; ++j) {
            vand(k, j) = p;
            p *= lambdas[k];
        }
    }
    std::vector<double> coeffs = linalg::lu_solve(vand, dets);
    double mx = 0.0;
    for (double c : coeffs) mx = std::max(mx, std::abs(c));
    if (mx == 0.0) throw numerical_error("pencil is identically singular at the sample point");
    int deg = static_cast<int>(coeffs.size()) - 1;
    while (deg > 0 && std::abs(coeffs[deg]) <= 1e-9 * mx) --deg;
    coeffs.resize(static_cast<size_t>(deg) + 1);
    return coeffs;
}

std::vector<RootCluster> cluster_roots(std::vector<std::complex<double>> roots, double tol) {
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    std::vector<RootCluster> out;
    for (const auto& z : roots) {
        bool merged = false;
        for (auto& cl : out) {
            if (std::abs(z - cl.value) <= tol) {
                cl.value = (cl.value * static_cast<double>(cl.multiplicity) + z) /
                           static_cast<double>(cl.multiplicity + 1);
                ++cl.multiplicity;
                merged = true;
                break;
            }
        }
        if (!merged) out.push_back({z, 1});
    }
    return out;
}

std::vector<std::complex<double>> j_eigenvalues(const PdaeProblem& pr, double x, double t) {
    const auto& cd = *pr.canonical;
    return linalg::eig_small(cd.J(x, t));
}

void require_canonical(const PdaeProblem& pr, const char* what) {
    if (!pr.canonical) throw unsupported_error(std::string(what) + " requires canonical data");
}

DenseMatrix canonical_pencil(const CanonicalData& cd, int n, double x, double t, double lambda) {
    DenseMatrix m(n, n);
    for (int i = 0; i < cd.d; ++i) m(i, i) = 1.0;
    for (int i = cd.d + cd.l; i < n; ++i) m(i, i) = 1.0;
    if (cd.M && cd.l > 0) {
        const DenseMatrix blk = cd.M(x, t);
        for (int i = 0; i < cd.l; ++i)
            for (int j = 0; j < cd.l; ++j) m(cd.d + i, cd.d + j) += blk(i, j);
    }
    if (cd.d > 0) {
        const DenseMatrix j = cd.J(x, t);
        for (int p = 0; p < cd.d; ++p)
            for (int q = 0; q < cd.d; ++q) m(p, q) += lambda * j(p, q);
    }
    for (int i = cd.d; i < cd.d + cd.l; ++i) m(i, i) += lambda;
    if (cd.N && cd.p > 0) {
        const DenseMatrix blk = cd.N(x, t);
        const int off = cd.d + cd.l;
        for (int i = 0; i < cd.p; ++i)
            for (int j = 0; j < cd.p; ++j) m(off + i, off + j) += lambda * blk(i, j);
    }
    return m;
}

}  // namespace

std::vector<double> char_poly(const PdaeProblem& pr, double x, double t) {
    return pencil_poly(pr.A, pr.B, pr.n, x, t);
}

std::vector<RootCluster> char_roots(const PdaeProblem& pr, double x, double t, double cluster_tol) {
    return cluster_roots(linalg::poly_roots(char_poly(pr, x, t)), cluster_tol);
}

std::pair<bool, bool> rank_degree_check(const PdaeProblem& pr,
                                        const std::vector<SamplePoint>& samples, double rank_tol) {
    bool b_ok = true, a_ok = true;
    for (const auto& s : samples) {
        const int deg_b = static_cast<int>(char_poly(pr, s.x, s.t).size()) - 1;
        const int deg_a = static_cast<int>(pencil_poly(pr.B, pr.A, pr.n, s.x, s.t).size()) - 1;
        if (linalg::rank(pr.B(s.x, s.t), rank_tol) != deg_b) b_ok = false;
        if (linalg::rank(pr.A(s.x, s.t), rank_tol) != deg_a) a_ok = false;
    }
    return {b_ok, a_ok};
}

double canonical_equivalence_residual(const PdaeProblem& pr,
                                      const std::vector<TriplePoint>& triples) {
    require_canonical(pr, "canonical_equivalence_residual");
    const auto& cd = *pr.canonical;
    if (cd.d + cd.l + cd.p != pr.n)
        throw argument_error("canonical block sizes do not add up to the system order");
    double worst = 0.0;
    for (const auto& tr : triples) {
        const DenseMatrix lhs = cd.P(tr.x, tr.t) *
                                (pr.A(tr.x, tr.t) + pr.B(tr.x, tr.t).scaled(tr.lambda)) *
                                cd.Q(tr.x, tr.t);
        const DenseMatrix rhs = canonical_pencil(cd, pr.n, tr.x, tr.t, tr.lambda);
        worst = std::max(worst, inf_norm(lhs - rhs));
    }
    return worst;
}

std::vector<TriplePoint> random_triples(double x_lo, double x_hi, double t_lo, double t_hi,
                                        int count, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> ux(x_lo, x_hi), ut(t_lo, t_hi), ul(-2.0, 2.0);
    std::vector<TriplePoint> out(static_cast<size_t>(count));
    for (auto& tr : out) {
        tr.x = ux(rng);
        tr.t = ut(rng);
        tr.lambda = ul(rng);
    }
    return out;
}

double min_eigen_separation(const PdaeProblem& pr, double r, int m1, int m2,
                            const std::vector<SamplePoint>& samples) {
    require_canonical(pr, "min_eigen_separation");
    if (pr.canonical->d == 0) return std::numeric_limits<double>::infinity();
    const auto gbar = linalg::eig_small(stencil::build(m1).gamma);
    const auto g = linalg::eig_small(stencil::build(m2).gamma);
    double sep = std::numeric_limits<double>::infinity();
    for (const auto& s : samples)
        for (const auto& xj : j_eigenvalues(pr, s.x, s.t))
            for (const auto& xb : gbar)
                for (const auto& xg : g) sep = std::min(sep, std::abs(r * xb * xj + xg));
    return sep;
}

double mu_spectral_radius(const PdaeProblem& pr, double r, int m1, int m2,
                          const std::vector<SamplePoint>& samples) {
    require_canonical(pr, "mu_spectral_radius");
    if (pr.canonical->d == 0) return 0.0;
    const auto gbar = linalg::eig_small(stencil::build(m1).gamma);
    double mu = 0.0;
    for (const auto& s : samples)
        for (const auto& xj : j_eigenvalues(pr, s.x, s.t))
            for (const auto& xb : gbar)
                for (int k = 1; k <= m2; ++k)
                    mu = std::max(mu, std::abs(std::exp(-static_cast<double>(k) * r * xb * xj)));
    return mu;
}

PencilReport analyze(const PdaeProblem& pr, double x0, double X, double t0, double T, double r,
                     int m1, int m2, int sample_count, unsigned seed) {
    if (sample_count < 1) throw argument_error("analyze needs at least one sample point");
    const int side = std::max(1, static_cast<int>(std::lround(std::sqrt(sample_count))));
    std::vector<SamplePoint> pts;
    for (int i = 1; i <= side; ++i)
        for (int j = 1; j <= side; ++j)
            pts.push_back({x0 + (X - x0) * i / (side + 1.0), t0 + (T - t0) * j / (side + 1.0)});

    PencilReport rep;
    rep.rank_degree_b = rep.rank_degree_a = true;
    for (const auto& s : pts) {
        PencilSample ps;
        ps.x = s.x;
        ps.t = s.t;
        ps.rank_a = linalg::rank(pr.A(s.x, s.t));
        ps.rank_b = linalg::rank(pr.B(s.x, s.t));
        const auto coeffs = char_poly(pr, s.x, s.t);
        ps.degree = static_cast<int>(coeffs.size()) - 1;
        ps.roots = cluster_roots(linalg::poly_roots(coeffs), 1e-6);
        const int deg_a = static_cast<int>(pencil_poly(pr.B, pr.A, pr.n, s.x, s.t).size()) - 1;
        ps.rank_degree_b = (ps.rank_b == ps.degree);
        ps.rank_degree_a = (ps.rank_a == deg_a);
        rep.rank_degree_b = rep.rank_degree_b && ps.rank_degree_b;
        rep.rank_degree_a = rep.rank_degree_a && ps.rank_degree_a;
        rep.samples.push_back(std::move(ps));
    }

    const auto multiplicities = [](const PencilSample& ps) {
        std::vector<int> m;
        for (const auto& cl : ps.roots) m.push_back(cl.multiplicity);
        std::sort(m.begin(), m.end());
        return m;
    };
    rep.multiplicity_constant = true;
    for (size_t k = 1; k < rep.samples.size(); ++k)
        if (multiplicities(rep.samples[k]) != multiplicities(rep.samples[0]))
            rep.multiplicity_constant = false;

    if (pr.canonical && pr.canonical->d > 0) {
        rep.min_separation = min_eigen_separation(pr, r, m1, m2, pts);
        rep.mu = mu_spectral_radius(pr, r, m1, m2, pts);
        double xi_min = std::numeric_limits<double>::infinity();
        for (const auto& s : pts)
            for (const auto& xj : j_eigenvalues(pr, s.x, s.t)) xi_min = std::min(xi_min, xj.real());
        rep.xi_j_min = xi_min;
    }
    if (pr.canonical)
        rep.canonical_residual =
            canonical_equivalence_residual(pr, random_triples(x0, X, t0, T, 20, seed));
    return rep;
}

}  // namespace pdae::pencil
