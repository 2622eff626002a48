#pragma once

#include <cstddef>
#include <vector>

namespace qlca {

/// Dense row-major matrix. Inventory systems here stay small (a few hundred
/// columns at most), so there is no sparsity handling and no blocking.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    /// y = M x
    std::vector<double> multiply(const std::vector<double>& x) const;

    /// Max absolute column sum.
    double norm1() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// LU factorization with partial pivoting. Throws ComputeError naming the
/// failing pivot column when the matrix is numerically singular.
class LuSolver {
public:
    explicit LuSolver(const Matrix& a);

    std::size_t size() const { return lu_.rows(); }

    std::vector<double> solve(const std::vector<double>& rhs) const;

    /// Exact 1-norm condition number, computed with n extra back-solves.
    double condition1() const;

private:
    Matrix lu_;
    std::vector<std::size_t> pivots_;
    double norm_a_ = 0.0;
};

}  // namespace qlca
