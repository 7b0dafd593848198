// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <initializer_list>
#include <vector>

namespace pdae {

using Vector = std::vector<double>;

/// Row-major dense real matrix. Constructors reject non-finite entries;
/// element writes through operator() are unchecked.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(int rows, int cols, double fill = 0.0);
    static DenseMatrix identity(int n);
    static DenseMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    const std::vector<double>& data() const noexcept { return a_; }
    bool is_finite() const noexcept;

    DenseMatrix operator*(const DenseMatrix& rhs) const;
    Vector operator*(const Vector& v) const;
    DenseMatrix operator+(const DenseMatrix& rhs) const;
    DenseMatrix operator-(const DenseMatrix& rhs) const;
    DenseMatrix scaled(double s) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> a_;
};

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

/// Max absolute entry.
double inf_norm(const DenseMatrix& m);
double inf_norm(const Vector& v);

}  // namespace pdae
