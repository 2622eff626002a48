#include "qlca/matrix.hpp"

#include "qlca/errors.hpp"

#include <cmath>
#include <string>

namespace qlca {

std::vector<double> Matrix::multiply(const std::vector<double>& x) const {
    if (x.size() != cols_) throw ComputeError("matrix multiply: size mismatch");
    std::vector<double> y(rows_, 0.0);
    for (std::size_t r = 0; r < rows_; ++r) {
        double acc = 0.0;
        for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * x[c];
        y[r] = acc;
    }
    return y;
}

double Matrix::norm1() const {
    double best = 0.0;
    for (std::size_t c = 0; c < cols_; ++c) {
        double sum = 0.0;
        for (std::size_t r = 0; r < rows_; ++r) sum += std::fabs((*this)(r, c));
        if (sum > best) best = sum;
    }
    return best;
}

LuSolver::LuSolver(const Matrix& a) : lu_(a) {
    if (a.rows() != a.cols()) throw ComputeError("LU: matrix not square");
    const std::size_t n = a.rows();
    norm_a_ = a.norm1();
    pivots_.resize(n);

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::fabs(lu_(k, k));
        for (std::size_t r = k + 1; r < n; ++r) {
            const double v = std::fabs(lu_(r, k));
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (!(best > 0.0) || !std::isfinite(best)) {
            throw ComputeError("singular technosphere matrix: no usable pivot in column " +
                               std::to_string(k));
        }
        pivots_[k] = piv;
        if (piv != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(lu_(k, c), lu_(piv, c));
        }
        const double d = lu_(k, k);
        for (std::size_t r = k + 1; r < n; ++r) {
            const double m = lu_(r, k) / d;
            lu_(r, k) = m;
            if (m == 0.0) continue;
            for (std::size_t c = k + 1; c < n; ++c) lu_(r, c) -= m * lu_(k, c);
        }
    }
}

std::vector<double> LuSolver::solve(const std::vector<double>& rhs) const {
    const std::size_t n = size();
    if (rhs.size() != n) throw ComputeError("LU solve: rhs size mismatch");
    std::vector<double> x = rhs;
    for (std::size_t k = 0; k < n; ++k) {
        if (pivots_[k] != k) std::swap(x[k], x[pivots_[k]]);
        for (std::size_t r = k + 1; r < n; ++r) x[r] -= lu_(r, k) * x[k];
    }
    for (std::size_t k = n; k-- > 0;) {
        for (std::size_t c = k + 1; c < n; ++c) x[k] -= lu_(k, c) * x[c];
        x[k] /= lu_(k, k);
    }
    return x;
}

double LuSolver::condition1() const {
    const std::size_t n = size();
    // ||A^-1||_1 is the max column norm of the inverse; solve for each unit vector.
    double inv_norm = 0.0;
    std::vector<double> e(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        e[j] = 1.0;
        const std::vector<double> col = solve(e);
        e[j] = 0.0;
        double sum = 0.0;
        for (double v : col) sum += std::fabs(v);
        if (sum > inv_norm) inv_norm = sum;
    }
    return norm_a_ * inv_norm;
}

}  // namespace qlca
