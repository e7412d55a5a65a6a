#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "scope/matrix.hpp"

namespace scope {

// Type-II DCT with orthonormal scaling:
//   X_k = a_k * sum_n x_n cos[pi/N (n + 1/2) k],  a_0 = sqrt(1/N), a_k = sqrt(2/N)
// Implemented by explicit basis-matrix multiplication; sizes here never
// exceed 450, so O(n^2) per axis is plenty and easy to audit.

struct TruncationSpec {
    std::size_t k1 = 0; // retained rows
    std::size_t k2 = 0; // retained cols
};

// Basis matrix A_n: row k holds the k-th cosine basis vector. A_n A_n^T = I.
inline RealMatrix dct_basis(std::size_t n) {
    if (n == 0)
        throw std::invalid_argument("dct_basis: n must be positive");
    RealMatrix a(n, n);
    const double a0 = std::sqrt(1.0 / static_cast<double>(n));
    const double ak = std::sqrt(2.0 / static_cast<double>(n));
    // Angle is pi*(2m+1)k/(2n); reduce (2m+1)k mod 4n in exact integer
    // arithmetic so large arguments never reach cos().
    const std::uint64_t four_n = 4 * static_cast<std::uint64_t>(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double alpha = (k == 0) ? a0 : ak;
        for (std::size_t m = 0; m < n; ++m) {
            const std::uint64_t num = ((2 * m + 1) * k) % four_n;
            const double angle =
                std::numbers::pi * static_cast<double>(num) / (2.0 * static_cast<double>(n));
            a(k, m) = alpha * std::cos(angle);
        }
    }
    return a;
}

inline std::vector<double> dct1(const std::vector<double>& x) {
    if (x.empty())
        throw std::invalid_argument("dct1: input must be non-empty");
    for (double v : x)
        if (!std::isfinite(v))
            throw std::invalid_argument("dct1: non-finite entries");
    const RealMatrix a = dct_basis(x.size());
    std::vector<double> out(x.size(), 0.0);
    for (std::size_t k = 0; k < x.size(); ++k) {
        double s = 0.0;
        for (std::size_t m = 0; m < x.size(); ++m)
            s += a(k, m) * x[m];
        out[k] = s;
    }
    return out;
}

// Caches the two basis matrices for a fixed shape; worth it when the same
// 6x450 transform runs thousands of times per trial.
class DctPlan {
public:
    DctPlan(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols),
          row_basis_(dct_basis(rows)),
          row_basis_t_(transpose(row_basis_)),
          col_basis_(dct_basis(cols)),
          col_basis_t_(transpose(col_basis_)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    // C = A_m M A_n^T
    RealMatrix forward(const RealMatrix& m) const {
        check_shape(m, "DctPlan::forward");
        require_finite(m, "dct2");
        return matmul(matmul(row_basis_, m), col_basis_t_);
    }

    // M = A_m^T C A_n (orthonormality makes the transpose the inverse)
    RealMatrix inverse(const RealMatrix& c) const {
        check_shape(c, "DctPlan::inverse");
        require_finite(c, "idct2");
        return matmul(matmul(row_basis_t_, c), col_basis_);
    }

private:
    void check_shape(const RealMatrix& m, const char* what) const {
        if (m.rows() != rows_ || m.cols() != cols_)
            throw std::invalid_argument(std::string(what) + ": shape mismatch with plan");
    }

    std::size_t rows_;
    std::size_t cols_;
    RealMatrix row_basis_;   // A_m
    RealMatrix row_basis_t_;
    RealMatrix col_basis_;   // A_n
    RealMatrix col_basis_t_;
};

inline RealMatrix dct2(const RealMatrix& m) {
    return DctPlan(m.rows(), m.cols()).forward(m);
}

inline RealMatrix idct2(const RealMatrix& c) {
    return DctPlan(c.rows(), c.cols()).inverse(c);
}

// Top-left k1 x k2 block, values copied unmodified.
inline RealMatrix truncate(const RealMatrix& c, const TruncationSpec& spec) {
    if (spec.k1 == 0 || spec.k2 == 0)
        throw std::invalid_argument("truncate: retained block must be non-empty");
    if (spec.k1 > c.rows() || spec.k2 > c.cols())
        throw std::invalid_argument("truncate: block exceeds source dimensions");
    RealMatrix out(spec.k1, spec.k2);
    for (std::size_t r = 0; r < spec.k1; ++r)
        for (std::size_t col = 0; col < spec.k2; ++col)
            out(r, col) = c(r, col);
    return out;
}

// Zero the floor(p*count) smallest-magnitude entries; ties resolved in
// row-major order so results are deterministic.
inline RealMatrix sparsify(const RealMatrix& c, double p) {
    if (!(p >= 0.0 && p < 1.0))
        throw std::invalid_argument("sparsify: p must be in [0,1)");
    RealMatrix out = c;
    const std::size_t n_zero = static_cast<std::size_t>(
        std::floor(p * static_cast<double>(c.size())));
    if (n_zero == 0) return out;
    std::vector<std::size_t> order(c.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const double ma = std::fabs(c.data()[a]);
        const double mb = std::fabs(c.data()[b]);
        return ma != mb ? ma < mb : a < b;
    });
    for (std::size_t i = 0; i < n_zero; ++i)
        out.data()[order[i]] = 0.0;
    return out;
}

// Zero-pad a truncated block back to the full shape (verification helper
// for reconstruction-error measurements).
inline RealMatrix zero_pad(const RealMatrix& block, std::size_t rows, std::size_t cols) {
    if (block.rows() > rows || block.cols() > cols)
        throw std::invalid_argument("zero_pad: block exceeds target dimensions");
    RealMatrix out(rows, cols, 0.0);
    for (std::size_t r = 0; r < block.rows(); ++r)
        for (std::size_t c = 0; c < block.cols(); ++c)
            out(r, c) = block(r, c);
    return out;
}

} // namespace scope
