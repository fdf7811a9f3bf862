#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace mca {

/// Dense row-major matrix of 64-bit reals.
///
/// `data` always holds exactly rows*cols values. Rows and columns are
/// positive for any matrix built through the checked constructor; the
/// default-constructed value is an empty placeholder.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0);

    /// Build from nested brace lists; all rows must have equal length.
    static Matrix from_rows(std::initializer_list<std::initializer_list<double>> init);

    double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
    double* row(std::size_t r) { return data.data() + r * cols; }
    const double* row(std::size_t r) const { return data.data() + r * cols; }

    bool all_finite() const;
};

/// Exact dense product; throws std::invalid_argument on shape mismatch.
Matrix matmul(const Matrix& a, const Matrix& b);

/// a * b^T without materializing the transpose.
Matrix matmul_nt(const Matrix& a, const Matrix& b);

Matrix transpose(const Matrix& m);

double frobenius_norm(const Matrix& m);

std::vector<double> row_l2_norms(const Matrix& m);
std::vector<double> col_l2_norms(const Matrix& m);

/// Row-wise softmax of (scale * row). Stabilized by subtracting the row
/// maximum before exponentiation, so rows sum to 1 for any finite input.
/// Entries lie in (0, 1]; a single-column matrix yields exactly 1, and
/// entries can underflow to 0 when scaled logits differ by more than ~745.
Matrix softmax_rows(const Matrix& m, double scale);

/// Maximum of column j; throws std::out_of_range for j >= cols.
double col_max(const Matrix& m, std::size_t j);

} // namespace mca
