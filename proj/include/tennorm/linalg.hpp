#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "tensor.hpp"

namespace tennorm {

/// Thrown when an iterative kernel fails to reach its residual target.
class numerical_failure : public std::runtime_error {
public:
    numerical_failure(const std::string& what, double residual)
        : std::runtime_error(what), residual(residual) {}
    double residual;
};

/// Row-major dense matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows * cols)
            throw std::invalid_argument("matrix data length mismatch");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static Matrix from_tensor(const Tensor& t) {
        if (t.order() != 2) throw std::invalid_argument("matrix conversion needs order 2");
        return Matrix(t.dim(0), t.dim(1),
                      std::vector<double>(t.data().begin(), t.data().end()));
    }

    Tensor to_tensor() const { return Tensor({rows_, cols_}, data_); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator*(const Matrix& other) const {
        if (cols_ != other.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix c(rows_, other.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                double a = (*this)(i, k);
                if (a == 0.0) continue;
                for (std::size_t j = 0; j < other.cols_; ++j)
                    c(i, j) += a * other(k, j);
            }
        return c;
    }

    double frobenius() const {
        double s = 0.0;
        for (double v : data_) s += v * v;
        return std::sqrt(s);
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> data_;
};

/// Symmetric matrix; symmetrized on construction by averaging.
class SymmetricMatrix {
public:
    explicit SymmetricMatrix(const Matrix& m) {
        if (m.rows() != m.cols())
            throw std::invalid_argument("symmetric matrix must be square");
        n_ = m.rows();
        mat_ = Matrix(n_, n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                mat_(i, j) = 0.5 * (m(i, j) + m(j, i));
    }
    explicit SymmetricMatrix(std::size_t n) : n_(n), mat_(n, n) {}

    std::size_t n() const { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return mat_(i, j); }
    double& entry(std::size_t i, std::size_t j) { return mat_(i, j); }
    const Matrix& matrix() const { return mat_; }

private:
    std::size_t n_ = 0;
    Matrix mat_;
};

struct SpectrumReport {
    std::vector<double> values;  ///< eigen- or singular values, descending
    std::size_t iterations = 0;
    double offdiag_residual = 0.0;
};

namespace detail {
inline constexpr std::size_t kJacobiSweepCap = 30;

inline double offdiag_frobenius(const Matrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}
}  // namespace detail

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.  If
/// `vectors` is non-null it receives the orthonormal eigenvector columns in
/// the same order as the returned (descending) eigenvalues.
inline SpectrumReport sym_eig(const SymmetricMatrix& m, double tol = 1e-12,
                              Matrix* vectors = nullptr) {
    if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
    std::size_t n = m.n();
    Matrix a = m.matrix();
    Matrix v = Matrix::identity(n);
    double scale = std::max(a.frobenius(), 1.0);
    std::size_t sweeps = 0;
    double res = detail::offdiag_frobenius(a);
    while (res > tol * scale && sweeps < detail::kJacobiSweepCap) {
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                double apq = a(p, q);
                if (apq == 0.0) continue;
                double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                double t = (theta >= 0.0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (std::size_t i = 0; i < n; ++i) {
                    double aip = a(i, p), aiq = a(i, q);
                    a(i, p) = c * aip - s * aiq;
                    a(i, q) = s * aip + c * aiq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    double api = a(p, i), aqi = a(q, i);
                    a(p, i) = c * api - s * aqi;
                    a(q, i) = s * api + c * aqi;
                    double vip = v(i, p), viq = v(i, q);
                    v(i, p) = c * vip - s * viq;
                    v(i, q) = s * vip + c * viq;
                }
            }
        ++sweeps;
        res = detail::offdiag_frobenius(a);
    }
    if (res > tol * scale)
        throw numerical_failure("jacobi eigensolve did not converge", res);

    SpectrumReport rep;
    rep.iterations = sweeps;
    rep.offdiag_residual = res;
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });
    rep.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) rep.values[i] = a(idx[i], idx[i]);
    if (vectors) {
        *vectors = Matrix(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) (*vectors)(i, j) = v(i, idx[j]);
    }
    return rep;
}

struct SvdResult {
    Matrix u;                    ///< left singular vectors, columns
    std::vector<double> sigma;   ///< descending, nonnegative
    Matrix v;                    ///< right singular vectors, columns
    std::size_t iterations = 0;
    double offdiag_residual = 0.0;
};

/// Full SVD by one-sided Jacobi (orthogonalizing columns of the taller
/// orientation).  Matrices here are small, accuracy over speed.
inline SvdResult svd(const Matrix& m, double tol = 1e-12) {
    bool transposed = m.rows() < m.cols();
    Matrix a = transposed ? m.transposed() : m;
    std::size_t rows = a.rows(), cols = a.cols();
    Matrix v = Matrix::identity(cols);
    double scale2 = 0.0;
    for (double x : a.data()) scale2 += x * x;
    scale2 = std::max(scale2, 1.0);

    std::size_t sweeps = 0;
    double res = 0.0;
    for (; sweeps < detail::kJacobiSweepCap; ++sweeps) {
        double off = 0.0;
        for (std::size_t p = 0; p + 1 < cols; ++p)
            for (std::size_t q = p + 1; q < cols; ++q) {
                double app = 0.0, aqq = 0.0, apq = 0.0;
                for (std::size_t i = 0; i < rows; ++i) {
                    app += a(i, p) * a(i, p);
                    aqq += a(i, q) * a(i, q);
                    apq += a(i, p) * a(i, q);
                }
                off = std::max(off, std::abs(apq));
                if (std::abs(apq) <= tol * scale2) continue;
                double theta = (aqq - app) / (2.0 * apq);
                double t = (theta >= 0.0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (std::size_t i = 0; i < rows; ++i) {
                    double aip = a(i, p), aiq = a(i, q);
                    a(i, p) = c * aip - s * aiq;
                    a(i, q) = s * aip + c * aiq;
                }
                for (std::size_t i = 0; i < cols; ++i) {
                    double vip = v(i, p), viq = v(i, q);
                    v(i, p) = c * vip - s * viq;
                    v(i, q) = s * vip + c * viq;
                }
            }
        res = off;
        if (off <= tol * scale2) break;
    }
    if (res > tol * scale2)
        throw numerical_failure("jacobi svd did not converge", res);

    std::vector<double> sigma(cols);
    Matrix u(rows, cols);
    for (std::size_t j = 0; j < cols; ++j) {
        double s2 = 0.0;
        for (std::size_t i = 0; i < rows; ++i) s2 += a(i, j) * a(i, j);
        sigma[j] = std::sqrt(s2);
        if (sigma[j] > 0.0)
            for (std::size_t i = 0; i < rows; ++i) u(i, j) = a(i, j) / sigma[j];
        else
            u(j < rows ? j : 0, j) = 1.0;  // arbitrary unit column for null directions
    }
    std::vector<std::size_t> idx(cols);
    for (std::size_t i = 0; i < cols; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t i, std::size_t j) { return sigma[i] > sigma[j]; });

    SvdResult out;
    out.iterations = sweeps;
    out.offdiag_residual = res;
    out.sigma.resize(cols);
    Matrix us(rows, cols), vs(cols, cols);
    for (std::size_t j = 0; j < cols; ++j) {
        out.sigma[j] = sigma[idx[j]];
        for (std::size_t i = 0; i < rows; ++i) us(i, j) = u(i, idx[j]);
        for (std::size_t i = 0; i < cols; ++i) vs(i, j) = v(i, idx[j]);
    }
    if (transposed) {
        out.u = vs;
        out.v = us;
    } else {
        out.u = us;
        out.v = vs;
    }
    return out;
}

inline SpectrumReport singular_values(const Matrix& m, double tol = 1e-12) {
    SvdResult r = svd(m, tol);
    return SpectrumReport{r.sigma, r.iterations, r.offdiag_residual};
}

inline double nuclear_norm(const Matrix& m) {
    double s = 0.0;
    for (double v : singular_values(m).values) s += v;
    return s;
}

inline double spectral_norm(const Matrix& m) {
    auto sv = singular_values(m).values;
    return sv.empty() ? 0.0 : sv.front();
}

struct MatrixNorms {
    double spectral = 0.0;
    double nuclear = 0.0;
    double spectral_radius = 0.0;  ///< square matrices only
};

inline double spectral_radius(const Matrix& m, double tol = 1e-12,
                              std::size_t max_iter = 10000) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("spectral radius needs a square matrix");
    std::size_t n = m.rows();
    // symmetric case: exact via Jacobi
    bool symmetric = true;
    for (std::size_t i = 0; i < n && symmetric; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(m(i, j) - m(j, i)) > 1e-12 * std::max(1.0, m.frobenius())) {
                symmetric = false;
                break;
            }
    if (symmetric) {
        auto ev = sym_eig(SymmetricMatrix(m)).values;
        double r = 0.0;
        for (double l : ev) r = std::max(r, std::abs(l));
        return r;
    }
    // power iteration on the square matrix
    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    double lambda = 0.0;
    for (std::size_t it = 0; it < max_iter; ++it) {
        std::vector<double> y(n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) y[i] += m(i, j) * x[j];
        double nrm = 0.0;
        for (double v : y) nrm += v * v;
        nrm = std::sqrt(nrm);
        if (nrm == 0.0) return 0.0;
        double prev = lambda;
        lambda = nrm;
        for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / nrm;
        if (it > 0 && std::abs(lambda - prev) <= tol * std::max(1.0, lambda)) break;
    }
    return lambda;
}

inline MatrixNorms matrix_norms(const Matrix& m) {
    MatrixNorms out;
    auto sv = singular_values(m).values;
    for (double s : sv) out.nuclear += s;
    out.spectral = sv.empty() ? 0.0 : sv.front();
    if (m.rows() == m.cols()) out.spectral_radius = spectral_radius(m);
    return out;
}

/// Gauss-Jordan inversion with partial pivoting.  Refuses matrices whose
/// smallest pivot falls below 1e-10 of the largest (near-singular input).
inline Matrix invert(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse needs a square matrix");
    std::size_t n = m.rows();
    Matrix a = m;
    Matrix inv = Matrix::identity(n);
    double max_pivot = 0.0, min_pivot = 0.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
        double pval = std::abs(a(piv, col));
        if (pval == 0.0) throw numerical_failure("singular matrix", 0.0);
        if (col == 0) max_pivot = min_pivot = pval;
        max_pivot = std::max(max_pivot, pval);
        min_pivot = std::min(min_pivot, pval);
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(col, j), a(piv, j));
                std::swap(inv(col, j), inv(piv, j));
            }
        double d = a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) /= d;
            inv(col, j) /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            double f = a(r, col);
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) -= f * a(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    if (min_pivot < 1e-10 * max_pivot)
        throw numerical_failure("matrix too ill-conditioned to invert",
                                min_pivot / max_pivot);
    return inv;
}

}  // namespace tennorm
