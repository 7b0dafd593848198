// SPDX-License-Identifier: Apache-2.0
#include "pdae/matrix.hpp"

#include <cmath>
#include <cstdlib>

#include "pdae/errors.hpp"

namespace pdae {

DenseMatrix::DenseMatrix(int rows, int cols, double fill) {
    if (rows < 0 || cols < 0) throw argument_error("matrix dimensions must be non-negative");
    if (!std::isfinite(fill)) throw argument_error("matrix fill value must be finite");
    rows_ = rows;
    cols_ = cols;
    a_.assign(static_cast<size_t>(rows) * cols, fill);
}

DenseMatrix DenseMatrix::identity(int n) {
    DenseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r > 0 ? static_cast<int>(rows.begin()->size()) : 0;
    DenseMatrix m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c) throw argument_error("ragged row list");
        int j = 0;
        for (double v : row) {
            if (!std::isfinite(v)) throw argument_error("matrix entries must be finite");
            m(i, j++) = v;
        }
        ++i;
    }
    return m;
}

bool DenseMatrix::is_finite() const noexcept {
    for (double v : a_)
        if (!std::isfinite(v)) return false;
    return true;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw argument_error("matrix product dimension mismatch");
    DenseMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const double aik = (*this)(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < rhs.cols_; ++j) out(i, j) += aik * rhs(k, j);
        }
    return out;
}

Vector DenseMatrix::operator*(const Vector& v) const {
    if (cols_ != static_cast<int>(v.size())) throw argument_error("matrix-vector dimension mismatch");
    Vector out(static_cast<size_t>(rows_), 0.0);
    for (int i = 0; i < rows_; ++i) {
        double s = 0.0;
        for (int j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw argument_error("matrix sum dimension mismatch");
    DenseMatrix out = *this;
    for (size_t k = 0; k < out.a_.size(); ++k) out.a_[k] += rhs.a_[k];
    return out;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw argument_error("matrix difference dimension mismatch");
    DenseMatrix out = *this;
    for (size_t k = 0; k < out.a_.size(); ++k) out.a_[k] -= rhs.a_[k];
    return out;
}

DenseMatrix DenseMatrix::scaled(double s) const {
    DenseMatrix out = *this;
    for (double& v : out.a_) v *= s;
    return out;
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const double aij = a(i, j);
            if (aij == 0.0) continue;
            for (int p = 0; p < b.rows(); ++p)
                for (int q = 0; q < b.cols(); ++q)
                    out(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
        }
    return out;
}

double inf_norm(const DenseMatrix& m) {
    double mx = 0.0;
    for (double v : m.data()) mx = std::max(mx, std::abs(v));
    return mx;
}

double inf_norm(const Vector& v) {
    double mx = 0.0;
    for (double x : v) mx = std::max(mx, std::abs(x));
    return mx;
}

}  // namespace pdae
