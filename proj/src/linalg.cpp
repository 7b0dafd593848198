// SPDX-License-Identifier: Apache-2.0
#include "pdae/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pdae/errors.hpp"

namespace pdae::linalg {

namespace {

constexpr double kPivotRel = 1e-12;
constexpr int kEigMaxOrder = 24;

struct LuFactor {
    DenseMatrix lu;
    std::vector<int> perm;
    int sign = 1;
    bool singular = false;
    int bad_pivot = -1;
};

LuFactor lu_factor(const DenseMatrix& m) {
    const int n = m.rows();
    LuFactor f{m, std::vector<int>(static_cast<size_t>(n)), 1, false, -1};
    for (int i = 0; i < n; ++i) f.perm[i] = i;
    const double scale = inf_norm(m);
    const double threshold = kPivotRel * scale;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::abs(f.lu(k, k));
        for (int i = k + 1; i < n; ++i) {
            const double v = std::abs(f.lu(i, k));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best <= threshold) {
            f.singular = true;
            f.bad_pivot = k;
            return f;
        }
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(f.lu(k, j), f.lu(piv, j));
            std::swap(f.perm[k], f.perm[piv]);
            f.sign = -f.sign;
        }
        for (int i = k + 1; i < n; ++i) {
            const double l = f.lu(i, k) / f.lu(k, k);
            f.lu(i, k) = l;
            if (l == 0.0) continue;
            for (int j = k + 1; j < n; ++j) f.lu(i, j) -= l * f.lu(k, j);
        }
    }
    return f;
}

Vector lu_apply(const LuFactor& f, const Vector& rhs) {
    const int n = f.lu.rows();
    Vector x(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) x[i] = rhs[f.perm[i]];
    for (int i = 1; i < n; ++i) {
        double s = x[i];
        for (int j = 0; j < i; ++j) s -= f.lu(i, j) * x[j];
        x[i] = s;
    }
    for (int i = n - 1; i >= 0; --i) {
        double s = x[i];
        for (int j = i + 1; j < n; ++j) s -= f.lu(i, j) * x[j];
        x[i] = s / f.lu(i, i);
    }
    return x;
}

void require_square(const DenseMatrix& m, const char* what) {
    if (m.rows() != m.cols()) throw argument_error(std::string(what) + ": matrix must be square");
    if (m.rows() == 0) throw argument_error(std::string(what) + ": matrix must be non-empty");
}

using cplx = std::complex<double>;
using CMatrix = std::vector<cplx>;  // row-major n*n

cplx& at(CMatrix& h, int n, int i, int j) { return h[static_cast<size_t>(i) * n + j]; }
cplx at(const CMatrix& h, int n, int i, int j) { return h[static_cast<size_t>(i) * n + j]; }

// Householder reduction of a complex matrix to upper Hessenberg form.
void hessenberg(CMatrix& h, int n) {
    for (int k = 0; k + 2 < n; ++k) {
        double colnorm = 0.0;
        for (int i = k + 1; i < n; ++i) colnorm += std::norm(at(h, n, i, k));
        colnorm = std::sqrt(colnorm);
        if (colnorm == 0.0) continue;
        cplx x0 = at(h, n, k + 1, k);
        cplx alpha = (std::abs(x0) == 0.0) ? cplx(-colnorm, 0.0) : -(x0 / std::abs(x0)) * colnorm;
        std::vector<cplx> v(static_cast<size_t>(n), cplx(0.0, 0.0));
        v[k + 1] = x0 - alpha;
        for (int i = k + 2; i < n; ++i) v[i] = at(h, n, i, k);
        double vnorm = 0.0;
        for (int i = k + 1; i < n; ++i) vnorm += std::norm(v[i]);
        vnorm = std::sqrt(vnorm);
        if (vnorm == 0.0) continue;
        for (int i = k + 1; i < n; ++i) v[i] /= vnorm;
        // left: H -= 2 v (v^H H)
        for (int j = 0; j < n; ++j) {
            cplx s(0.0, 0.0);
            for (int i = k + 1; i < n; ++i) s += std::conj(v[i]) * at(h, n, i, j);
            s *= 2.0;
            for (int i = k + 1; i < n; ++i) at(h, n, i, j) -= v[i] * s;
        }
        // right: H -= 2 (H v) v^H
        for (int i = 0; i < n; ++i) {
            cplx s(0.0, 0.0);
            for (int j = k + 1; j < n; ++j) s += at(h, n, i, j) * v[j];
            s *= 2.0;
            for (int j = k + 1; j < n; ++j) at(h, n, i, j) -= s * std::conj(v[j]);
        }
        at(h, n, k + 1, k) = alpha;
        for (int i = k + 2; i < n; ++i) at(h, n, i, k) = cplx(0.0, 0.0);
    }
}

struct Givens {
    double c;
    cplx s;
};

// G [a; b] = [r; 0] with G = [[c, s], [-conj(s), c]], c real.
Givens make_givens(cplx a, cplx b) {
    if (std::abs(b) == 0.0) return {1.0, cplx(0.0, 0.0)};
    if (std::abs(a) == 0.0) return {0.0, std::conj(b) / std::abs(b)};
    const double t = std::hypot(std::abs(a), std::abs(b));
    const cplx phase = a / std::abs(a);
    return {std::abs(a) / t, phase * std::conj(b) / t};
}

cplx wilkinson_shift(const CMatrix& h, int n, int hi) {
    const cplx a = at(h, n, hi - 1, hi - 1);
    const cplx b = at(h, n, hi - 1, hi);
    const cplx c = at(h, n, hi, hi - 1);
    const cplx d = at(h, n, hi, hi);
    const cplx tr = a + d;
    const cplx det = a * d - b * c;
    const cplx disc = std::sqrt(tr * tr - 4.0 * det);
    const cplx r1 = (tr + disc) / 2.0;
    const cplx r2 = (tr - disc) / 2.0;
    return (std::abs(r1 - d) < std::abs(r2 - d)) ? r1 : r2;
}

// Explicit single-shift QR sweep on the active Hessenberg block [lo, hi].
void qr_sweep(CMatrix& h, int n, int lo, int hi, cplx shift) {
    std::vector<Givens> rot(static_cast<size_t>(hi - lo));
    for (int i = lo; i <= hi; ++i) at(h, n, i, i) -= shift;
    for (int j = lo; j < hi; ++j) {
        const Givens g = make_givens(at(h, n, j, j), at(h, n, j + 1, j));
        rot[j - lo] = g;
        for (int k = j; k < n; ++k) {
            const cplx x = at(h, n, j, k);
            const cplx y = at(h, n, j + 1, k);
            at(h, n, j, k) = g.c * x + g.s * y;
            at(h, n, j + 1, k) = -std::conj(g.s) * x + g.c * y;
        }
    }
    for (int j = lo; j < hi; ++j) {
        const Givens g = rot[j - lo];
        const int top = std::min(j + 1, hi);
        for (int i = 0; i <= top; ++i) {
            const cplx x = at(h, n, i, j);
            const cplx y = at(h, n, i, j + 1);
            at(h, n, i, j) = g.c * x + std::conj(g.s) * y;
            at(h, n, i, j + 1) = -g.s * x + g.c * y;
        }
    }
    for (int i = lo; i <= hi; ++i) at(h, n, i, i) += shift;
}

}  // namespace

Vector lu_solve(const DenseMatrix& m, const Vector& rhs) {
    require_square(m, "lu_solve");
    if (m.rows() != static_cast<int>(rhs.size())) throw argument_error("lu_solve: rhs size mismatch");
    const LuFactor f = lu_factor(m);
    if (f.singular)
        throw singular_error("lu_solve: negligible pivot at index " + std::to_string(f.bad_pivot),
                             f.bad_pivot);
    return lu_apply(f, rhs);
}

DenseMatrix lu_solve(const DenseMatrix& m, const DenseMatrix& rhs) {
    require_square(m, "lu_solve");
    if (m.rows() != rhs.rows()) throw argument_error("lu_solve: rhs rows mismatch");
    const LuFactor f = lu_factor(m);
    if (f.singular)
        throw singular_error("lu_solve: negligible pivot at index " + std::to_string(f.bad_pivot),
                             f.bad_pivot);
    DenseMatrix out(rhs.rows(), rhs.cols());
    Vector col(static_cast<size_t>(rhs.rows()));
    for (int j = 0; j < rhs.cols(); ++j) {
        for (int i = 0; i < rhs.rows(); ++i) col[i] = rhs(i, j);
        const Vector x = lu_apply(f, col);
        for (int i = 0; i < rhs.rows(); ++i) out(i, j) = x[i];
    }
    return out;
}

DenseMatrix inverse(const DenseMatrix& m) { return lu_solve(m, DenseMatrix::identity(m.rows())); }

double det(const DenseMatrix& m) {
    require_square(m, "det");
    const LuFactor f = lu_factor(m);
    if (f.singular) return 0.0;
    double d = f.sign;
    for (int i = 0; i < m.rows(); ++i) d *= f.lu(i, i);
    return d;
}

int rank(const DenseMatrix& m, double tol) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    DenseMatrix a = m;
    const int nr = a.rows(), nc = a.cols();
    const double first = inf_norm(a);
    if (first == 0.0) return 0;
    const double threshold = tol * first;
    const int steps = std::min(nr, nc);
    int r = 0;
    for (int k = 0; k < steps; ++k) {
        int pi = k, pj = k;
        double best = 0.0;
        for (int i = k; i < nr; ++i)
            for (int j = k; j < nc; ++j) {
                const double v = std::abs(a(i, j));
                if (v > best) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (best <= threshold) break;
        if (pi != k)
            for (int j = 0; j < nc; ++j) std::swap(a(k, j), a(pi, j));
        if (pj != k)
            for (int i = 0; i < nr; ++i) std::swap(a(i, k), a(i, pj));
        for (int i = k + 1; i < nr; ++i) {
            const double l = a(i, k) / a(k, k);
            if (l == 0.0) continue;
            for (int j = k; j < nc; ++j) a(i, j) -= l * a(k, j);
        }
        ++r;
    }
    return r;
}

std::vector<std::complex<double>> eig_small(const DenseMatrix& m) {
    require_square(m, "eig_small");
    const int n = m.rows();
    if (n > kEigMaxOrder) throw argument_error("eig_small: order exceeds 24");
    if (!m.is_finite()) throw argument_error("eig_small: non-finite entries");
    CMatrix h(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) at(h, n, i, j) = cplx(m(i, j), 0.0);
    if (n == 1) return {at(h, n, 0, 0)};
    hessenberg(h, n);

    const double eps = 2.22e-16;
    double hnorm = 0.0;
    for (const cplx& v : h) hnorm = std::max(hnorm, std::abs(v));
    if (hnorm == 0.0) return std::vector<cplx>(static_cast<size_t>(n), cplx(0.0, 0.0));

    std::vector<cplx> eig;
    eig.reserve(static_cast<size_t>(n));
    int hi = n - 1;
    int iters_at_hi = 0;
    while (hi >= 0) {
        if (hi == 0) {
            eig.push_back(at(h, n, 0, 0));
            break;
        }
        // deflation scan
        int lo = hi;
        while (lo > 0) {
            const double sub = std::abs(at(h, n, lo, lo - 1));
            double local = std::abs(at(h, n, lo - 1, lo - 1)) + std::abs(at(h, n, lo, lo));
            if (local == 0.0) local = hnorm;
            if (sub <= eps * local) {
                at(h, n, lo, lo - 1) = cplx(0.0, 0.0);
                break;
            }
            --lo;
        }
        if (lo == hi) {
            eig.push_back(at(h, n, hi, hi));
            --hi;
            iters_at_hi = 0;
            continue;
        }
        cplx shift = wilkinson_shift(h, n, hi);
        ++iters_at_hi;
        if (iters_at_hi % 12 == 0)
            shift = at(h, n, hi, hi) + 0.75 * std::abs(at(h, n, hi, hi - 1));
        if (iters_at_hi > 40 * n)
            throw numerical_error("eig_small: QR iteration failed to converge");
        qr_sweep(h, n, lo, hi, shift);
    }
    return eig;
}

DenseMatrix mat_exp(const DenseMatrix& m) {
    require_square(m, "mat_exp");
    if (!m.is_finite()) throw argument_error("mat_exp: non-finite entries");
    const int n = m.rows();
    const double norm = inf_norm(m) * n;
    int s = 0;
    if (norm > 0.5) s = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    DenseMatrix a = m.scaled(1.0 / std::ldexp(1.0, s));
    DenseMatrix result = DenseMatrix::identity(n);
    DenseMatrix term = DenseMatrix::identity(n);
    for (int k = 1; k <= 64; ++k) {
        term = (term * a).scaled(1.0 / k);
        result = result + term;
        if (inf_norm(term) <= 1e-18 * inf_norm(result)) break;
    }
    for (int k = 0; k < s; ++k) result = result * result;
    return result;
}

std::vector<std::complex<double>> poly_roots(const std::vector<double>& ascending) {
    if (ascending.empty()) throw argument_error("poly_roots: empty coefficient list");
    double mx = 0.0;
    for (double c : ascending) mx = std::max(mx, std::abs(c));
    if (mx == 0.0) throw argument_error("poly_roots: all coefficients vanish");
    int deg = static_cast<int>(ascending.size()) - 1;
    while (deg > 0 && std::abs(ascending[deg]) <= 1e-12 * mx) --deg;
    if (deg == 0) return {};
    DenseMatrix companion(deg, deg);
    for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
    const double lead = ascending[deg];
    for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -ascending[i] / lead;
    return eig_small(companion);
}

}  // namespace pdae::linalg
