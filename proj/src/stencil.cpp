// SPDX-License-Identifier: Apache-2.0
#include "pdae/stencil.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "pdae/errors.hpp"
#include "pdae/linalg.hpp"

namespace pdae::stencil {

namespace {

constexpr int kMaxDegree = 10;

using i128 = __int128;

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        const i128 r = a % b;
        a = b;
        b = r;
    }
    return a;
}

void check_args(int m, int s, int l3) {
    if (m < 1 || m > kMaxDegree)
        throw argument_error("stencil degree must be in 1.." + std::to_string(kMaxDegree));
    if (s < 1 || s > m) throw argument_error("stencil row s must be in 1..m");
    if (l3 < 0 || l3 > m) throw argument_error("stencil column l3 must be in 0..m");
}

// Integer coefficients of prod_{nu=0..m, nu!=l3} (x - nu), ascending.
std::vector<i128> node_product(int m, int l3) {
    std::vector<i128> c{1};
    for (int nu = 0; nu <= m; ++nu) {
        if (nu == l3) continue;
        std::vector<i128> next(c.size() + 1, 0);
        for (size_t k = 0; k < c.size(); ++k) {
            next[k] -= c[k] * nu;
            next[k + 1] += c[k];
        }
        c = std::move(next);
    }
    return c;
}

i128 binomial(int n, int k) {
    i128 r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

i128 factorial(int n) {
    i128 r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace

double weight(int m, int s, int l3) {
    check_args(m, s, l3);
    const std::vector<i128> poly = node_product(m, l3);
    // derivative evaluated at the integer s, Horner in 128-bit
    i128 dval = 0;
    for (int k = static_cast<int>(poly.size()) - 1; k >= 1; --k) dval = dval * s + poly[k] * k;
    i128 num = binomial(m, l3) * dval;
    if ((m + l3) % 2 != 0) num = -num;
    i128 den = factorial(m);
    const i128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return static_cast<double>(num) / static_cast<double>(den);
}

StencilTable build(int m) {
    if (m < 1 || m > kMaxDegree)
        throw argument_error("stencil degree must be in 1.." + std::to_string(kMaxDegree));
    StencilTable t;
    t.degree = m;
    t.full_weights = DenseMatrix(m, m + 1);
    t.gamma0 = Vector(static_cast<size_t>(m));
    t.gamma = DenseMatrix(m, m);
    for (int s = 1; s <= m; ++s)
        for (int l3 = 0; l3 <= m; ++l3) {
            const double w = weight(m, s, l3);
            t.full_weights(s - 1, l3) = w;
            if (l3 == 0)
                t.gamma0[s - 1] = w;
            else
                t.gamma(s - 1, l3 - 1) = w;
        }
    for (int s = 0; s < m; ++s) {
        double row = t.gamma0[s];
        for (int j = 0; j < m; ++j) row += t.gamma(s, j);
        if (std::abs(row) > 1e-12)
            throw numerical_error("stencil table row sum nonzero at row " + std::to_string(s + 1));
    }
    if (linalg::det(t.gamma) == 0.0) throw numerical_error("stencil gamma block is singular");
    return t;
}

Vector lagrange_derivative_row(int m, int s) {
    if (m < 1 || m > kMaxDegree)
        throw argument_error("stencil degree must be in 1.." + std::to_string(kMaxDegree));
    if (s < 1 || s > m) throw argument_error("stencil row s must be in 1..m");
    Vector out(static_cast<size_t>(m) + 1);
    for (int l3 = 0; l3 <= m; ++l3) {
        std::vector<double> c{1.0};
        double den = 1.0;
        for (int nu = 0; nu <= m; ++nu) {
            if (nu == l3) continue;
            std::vector<double> next(c.size() + 1, 0.0);
            for (size_t k = 0; k < c.size(); ++k) {
                next[k] -= c[k] * nu;
                next[k + 1] += c[k];
            }
            c = std::move(next);
            den *= static_cast<double>(l3 - nu);
        }
        double dval = 0.0;
        for (int k = static_cast<int>(c.size()) - 1; k >= 1; --k) dval = dval * s + c[k] * k;
        out[l3] = dval / den;
    }
    return out;
}

}  // namespace pdae::stencil
