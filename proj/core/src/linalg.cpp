#include "condkit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

namespace condkit::linalg {

namespace {

using Column = std::vector<double>;

double dot(const Column& a, const Column& b) noexcept {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(const Column& a) noexcept { return std::sqrt(dot(a, a)); }

void require_finite(const Matrix& a, const char* what) {
    if (a.empty()) throw Error(ErrorCode::InvalidInput, std::string(what) + ": empty matrix");
    if (!a.all_finite()) throw Error(ErrorCode::InvalidInput, std::string(what) + ": non-finite entry");
}

void require_square(const Matrix& a, const char* what) {
    if (!a.is_square()) {
        throw Error(ErrorCode::InvalidInput, std::string(what) + ": matrix must be square, got " +
                                                 std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    }
}

// Removes the components of `x` along every column in `basis` (two passes of
// modified Gram-Schmidt) and returns the remaining norm.
double orthogonalize(Column& x, const std::vector<Column>& basis) {
    for (int pass = 0; pass < 2; ++pass) {
        for (const auto& b : basis) {
            const double c = dot(x, b);
            for (std::size_t i = 0; i < x.size(); ++i) x[i] -= c * b[i];
        }
    }
    return norm2(x);
}

// Appends standard-basis derived unit vectors until `basis` holds `target` columns.
void complete_basis(std::vector<Column>& basis, std::size_t dim, std::size_t target) {
    while (basis.size() < target) {
        Column best;
        double best_norm = -1.0;
        for (std::size_t e = 0; e < dim; ++e) {
            Column x(dim, 0.0);
            x[e] = 1.0;
            const double r = orthogonalize(x, basis);
            if (r > best_norm) {
                best_norm = r;
                best = std::move(x);
            }
        }
        for (auto& v : best) v /= best_norm;
        basis.push_back(std::move(best));
    }
}

// True when the column should be negated under the sign convention.
bool needs_flip(const Column& c) noexcept {
    std::size_t arg = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (std::abs(c[i]) > best) {
            best = std::abs(c[i]);
            arg = i;
        }
    }
    return c[arg] < 0.0;
}

void negate(Column& c) noexcept {
    for (auto& v : c) v = -v;
}

Matrix from_columns(const std::vector<Column>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    return m;
}

// SVD for rows >= cols. Returns u (rows x rows), sigma (cols), v (cols x cols)
// before sign normalization.
struct TallResult {
    std::vector<Column> u;
    std::vector<double> sigma;
    std::vector<Column> v;
};

TallResult jacobi_tall(const Matrix& a, const JacobiOptions& options) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();

    // Power-of-two prescaling is exact and keeps dot products away from
    // underflow/overflow.
    double max_abs = 0.0;
    for (double x : a.entries()) max_abs = std::max(max_abs, std::abs(x));
    int exponent = 0;
    if (max_abs > 0.0) std::frexp(max_abs, &exponent);

    std::vector<Column> w(n, Column(m));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < m; ++i) w[j][i] = std::ldexp(a(i, j), -exponent);

    std::vector<Column> v(n, Column(n, 0.0));
    for (std::size_t j = 0; j < n; ++j) v[j][j] = 1.0;

    for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double alpha = dot(w[p], w[p]);
                const double beta = dot(w[q], w[q]);
                const double gamma = dot(w[p], w[q]);
                if (gamma == 0.0 || std::abs(gamma) <= options.tolerance * std::sqrt(alpha * beta)) continue;
                rotated = true;
                const double zeta = (beta - alpha) / (2.0 * gamma);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::hypot(1.0, zeta));
                const double c = 1.0 / std::hypot(1.0, t);
                const double s = c * t;
                for (std::size_t i = 0; i < m; ++i) {
                    const double wp = w[p][i];
                    const double wq = w[q][i];
                    w[p][i] = c * wp - s * wq;
                    w[q][i] = s * wp + c * wq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double vp = v[p][i];
                    const double vq = v[q][i];
                    v[p][i] = c * vp - s * vq;
                    v[q][i] = s * vp + c * vq;
                }
            }
        }
        if (!rotated) break;
    }

    std::vector<double> norms(n);
    for (std::size_t j = 0; j < n; ++j) norms[j] = norm2(w[j]);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return norms[x] > norms[y]; });

    TallResult out;
    out.sigma.reserve(n);
    out.v.reserve(n);
    const double top = n > 0 ? norms[order[0]] : 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t j = order[k];
        out.sigma.push_back(std::ldexp(norms[j], exponent));
        out.v.push_back(v[j]);
    }
    // Left vectors in sorted order; tiny singular values get re-orthogonalized
    // because their columns are dominated by rounding noise.
    std::vector<Column> left(n);
    std::vector<bool> have(n, false);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t j = order[k];
        if (norms[j] == 0.0) continue;
        Column x = w[j];
        for (auto& e : x) e /= norms[j];
        if (norms[j] <= 1e-12 * top) {
            std::vector<Column> previous;
            for (std::size_t i = 0; i < k; ++i)
                if (have[i]) previous.push_back(left[i]);
            const double r = orthogonalize(x, previous);
            if (r < 0.5) continue;
            for (auto& e : x) e /= r;
        }
        left[k] = std::move(x);
        have[k] = true;
    }
    std::vector<Column> basis;
    for (std::size_t k = 0; k < n; ++k)
        if (have[k]) basis.push_back(left[k]);
    // Zero singular values and the m - n extra columns share one completion pass.
    for (std::size_t k = 0; k < n; ++k) {
        if (have[k]) continue;
        complete_basis(basis, m, basis.size() + 1);
        left[k] = basis.back();
        have[k] = true;
    }
    complete_basis(basis, m, m);
    out.u = std::move(left);
    for (std::size_t k = n; k < m; ++k) out.u.push_back(basis[k]);
    return out;
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, 0.0) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows_ == 0 || cols_ == 0) throw Error(ErrorCode::InvalidInput, "matrix shape must be positive");
    if (entries_.size() != rows_ * cols_) {
        throw Error(ErrorCode::InvalidInput, "expected " + std::to_string(rows_ * cols_) + " entries, got " +
                                                 std::to_string(entries_.size()));
    }
    if (!all_finite()) throw Error(ErrorCode::InvalidInput, "matrix entries must be finite");
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::diagonal(std::span<const double> values) {
    Matrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

double Matrix::frobenius_norm() const noexcept {
    double s = 0.0;
    for (double x : entries_) s += x * x;
    return std::sqrt(s);
}

bool Matrix::all_finite() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](double x) { return std::isfinite(x); });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw Error(ErrorCode::InvalidInput, "matrix product shape mismatch");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::InvalidInput, "shape mismatch");
    double d = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) d = std::max(d, std::abs(a.entries()[i] - b.entries()[i]));
    return d;
}

SvdFactors svd(const Matrix& a, const JacobiOptions& options) {
    require_finite(a, "svd");
    const bool wide = a.rows() < a.cols();
    TallResult r = jacobi_tall(wide ? a.transpose() : a, options);
    // For a wide input the tall factors belong to a^T = u' s v'^T, so a = v' s u'^T.
    std::vector<Column> u = wide ? std::move(r.v) : std::move(r.u);
    std::vector<Column> v = wide ? std::move(r.u) : std::move(r.v);

    const std::size_t k = r.sigma.size();
    for (std::size_t j = 0; j < k; ++j) {
        if (needs_flip(u[j])) {
            negate(u[j]);
            negate(v[j]);
        }
    }
    for (std::size_t j = k; j < u.size(); ++j)
        if (needs_flip(u[j])) negate(u[j]);
    for (std::size_t j = k; j < v.size(); ++j)
        if (needs_flip(v[j])) negate(v[j]);

    return SvdFactors{from_columns(u, a.rows()), std::move(r.sigma), from_columns(v, a.cols())};
}

Matrix reconstruct(const SvdFactors& f) {
    if (!f.u.is_square() || !f.v.is_square() || f.u.empty() || f.v.empty() ||
        f.sigma.size() != std::min(f.u.rows(), f.v.rows())) {
        throw Error(ErrorCode::InvalidInput, "reconstruct: inconsistent factor shapes");
    }
    const std::size_t m = f.u.rows();
    const std::size_t n = f.v.rows();
    Matrix out(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < f.sigma.size(); ++k) s += f.u(i, k) * f.sigma[k] * f.v(j, k);
            out(i, j) = s;
        }
    return out;
}

bool is_numerically_singular(std::span<const double> sigma) noexcept {
    if (sigma.empty()) return true;
    const double last = sigma.back();
    return last == 0.0 || last <= kSingularityRatio * sigma.front();
}

double spectral_norm(const Matrix& a) { return svd(a).sigma.front(); }

namespace {

std::vector<double> square_sigma(const Matrix& a, const char* what) {
    require_finite(a, what);
    require_square(a, what);
    auto sigma = svd(a).sigma;
    if (is_numerically_singular(sigma)) throw Error(ErrorCode::SingularMatrix, std::string(what) + ": sigma_n below threshold");
    return sigma;
}

}  // namespace

double inverse_spectral_norm(const Matrix& a) { return 1.0 / square_sigma(a, "inverse_spectral_norm").back(); }

double condition_number(const Matrix& a) {
    const auto sigma = square_sigma(a, "condition_number");
    return sigma.front() / sigma.back();
}

Matrix inverse(const Matrix& a) {
    require_finite(a, "inverse");
    require_square(a, "inverse");
    const SvdFactors f = svd(a);
    if (is_numerically_singular(f.sigma)) throw Error(ErrorCode::SingularMatrix, "inverse: sigma_n below threshold");
    const std::size_t n = a.rows();
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < n; ++k) s += f.v(i, k) * f.u(j, k) / f.sigma[k];
            out(i, j) = s;
        }
    return out;
}

SpectralSummary spectral_summary(const Matrix& a) {
    require_finite(a, "spectral_summary");
    require_square(a, "spectral_summary");
    const auto sigma = svd(a).sigma;
    SpectralSummary s;
    s.norm = sigma.front();
    if (!is_numerically_singular(sigma)) {
        s.inverse_norm = 1.0 / sigma.back();
        s.kappa = sigma.front() / sigma.back();
    }
    return s;
}

}  // namespace condkit::linalg
