#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "condkit/error.hpp"

namespace condkit::linalg {

/// Dense real matrix stored row-major. Small by design: the toolkit works on
/// convolution-filter sized matrices (n <= 32).
class Matrix {
public:
    Matrix() = default;
    /// Zero-filled rows x cols matrix.
    Matrix(std::size_t rows, std::size_t cols);
    /// Takes ownership of row-major entries; throws InvalidInput on a size
    /// mismatch, an empty shape or a non-finite entry.
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

    static Matrix identity(std::size_t n);
    static Matrix diagonal(std::span<const double> values);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }
    [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }

    double& operator()(std::size_t r, std::size_t c) noexcept { return entries_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const noexcept { return entries_[r * cols_ + c]; }

    [[nodiscard]] std::span<const double> entries() const noexcept { return entries_; }
    [[nodiscard]] std::span<double> entries() noexcept { return entries_; }

    [[nodiscard]] Matrix transpose() const;
    [[nodiscard]] double frobenius_norm() const noexcept;
    [[nodiscard]] bool all_finite() const noexcept;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> entries_;
};

/// Largest absolute entrywise difference; InvalidInput on shape mismatch.
double max_abs_diff(const Matrix& a, const Matrix& b);

/// Thin-sigma, full-basis singular value decomposition a = u * diag(sigma) * v^T.
/// u is m x m, v is n x n, sigma has min(m, n) entries sorted descending.
struct SvdFactors {
    Matrix u;
    std::vector<double> sigma;
    Matrix v;
};

/// Tuning for the one-sided Jacobi iteration.
struct JacobiOptions {
    /// A column pair is treated as orthogonal once |<a_p, a_q>| <= tolerance * |a_p| |a_q|.
    double tolerance = 1e-14;
    int max_sweeps = 60;
};

/// One-sided (Hestenes) Jacobi SVD.
///
/// Output is deterministic: singular vector pairs are sign-normalized so that
/// the largest-magnitude entry of every column of u is positive (ties go to
/// the lowest row index). Columns of u (or v) without a partner singular value
/// are completed from the standard basis and follow the same sign rule.
SvdFactors svd(const Matrix& a, const JacobiOptions& options = {});

/// u * diag(sigma) * v^T. u must be square, v must be square and sigma must
/// have min(u.rows, v.rows) entries; anything else is InvalidInput.
Matrix reconstruct(const SvdFactors& factors);

/// sigma_n <= this * sigma_1 (or sigma_n == 0) counts as singular.
inline constexpr double kSingularityRatio = 1e-300;

/// True when the smallest singular value is below the singularity threshold.
bool is_numerically_singular(std::span<const double> sigma) noexcept;

double spectral_norm(const Matrix& a);
/// 1 / sigma_n. Square only; SingularMatrix below the threshold.
double inverse_spectral_norm(const Matrix& a);
/// sigma_1 / sigma_n. Square only; SingularMatrix below the threshold.
double condition_number(const Matrix& a);
/// v * diag(1 / sigma) * u^T. Square only; SingularMatrix below the threshold.
Matrix inverse(const Matrix& a);

/// Spectral quantities of a square matrix from a single decomposition.
/// `inverse_norm` and `kappa` are empty when the matrix is numerically singular.
struct SpectralSummary {
    double norm = 0.0;
    std::optional<double> inverse_norm;
    std::optional<double> kappa;
};

SpectralSummary spectral_summary(const Matrix& a);

}  // namespace condkit::linalg
