#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tennorm {

/// Dense real tensor with explicit shape, stored flat in row-major order
/// (last index varies fastest).  Order-1 tensors are vectors, order-2 are
/// matrices.
class Tensor {
public:
    Tensor() = default;

    explicit Tensor(std::vector<std::size_t> shape)
        : shape_(std::move(shape)) {
        check_shape();
        data_.assign(size_from_shape(), 0.0);
    }

    Tensor(std::vector<std::size_t> shape, std::vector<double> data)
        : shape_(std::move(shape)), data_(std::move(data)) {
        check_shape();
        if (data_.size() != size_from_shape())
            throw std::invalid_argument("tensor data length does not match shape");
        for (double v : data_)
            if (!std::isfinite(v))
                throw std::invalid_argument("tensor entries must be finite");
    }

    static Tensor zeros(std::vector<std::size_t> shape) { return Tensor(std::move(shape)); }

    std::size_t order() const { return shape_.size(); }
    const std::vector<std::size_t>& shape() const { return shape_; }
    std::size_t dim(std::size_t mode) const { return shape_.at(mode); }
    std::size_t size() const { return data_.size(); }

    std::span<const double> data() const { return data_; }
    std::span<double> data() { return data_; }

    double operator[](std::size_t flat) const { return data_[flat]; }
    double& operator[](std::size_t flat) { return data_[flat]; }

    /// Entry at a multi-index (0-based, one index per mode).
    double at(std::span<const std::size_t> idx) const { return data_[flat_index(idx)]; }
    double& at(std::span<const std::size_t> idx) { return data_[flat_index(idx)]; }
    double at(std::initializer_list<std::size_t> idx) const {
        return at(std::span<const std::size_t>(idx.begin(), idx.size()));
    }
    double& at(std::initializer_list<std::size_t> idx) {
        std::span<const std::size_t> s(idx.begin(), idx.size());
        return data_[flat_index(s)];
    }

    std::size_t flat_index(std::span<const std::size_t> idx) const {
        if (idx.size() != shape_.size())
            throw std::invalid_argument("index arity does not match tensor order");
        std::size_t flat = 0;
        for (std::size_t m = 0; m < shape_.size(); ++m) {
            if (idx[m] >= shape_[m]) throw std::out_of_range("tensor index out of range");
            flat = flat * shape_[m] + idx[m];
        }
        return flat;
    }

    bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }

    Tensor& operator*=(double s) {
        for (double& v : data_) v *= s;
        return *this;
    }
    Tensor& operator+=(const Tensor& other) {
        require_same_shape(other);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
        return *this;
    }
    Tensor& operator-=(const Tensor& other) {
        require_same_shape(other);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
        return *this;
    }
    friend Tensor operator*(double s, Tensor t) { t *= s; return t; }
    friend Tensor operator+(Tensor a, const Tensor& b) { a += b; return a; }
    friend Tensor operator-(Tensor a, const Tensor& b) { a -= b; return a; }

private:
    void check_shape() const {
        if (shape_.empty())
            throw std::invalid_argument("tensor order must be at least 1");
        for (std::size_t n : shape_)
            if (n == 0) throw std::invalid_argument("every mode dimension must be >= 1");
    }
    std::size_t size_from_shape() const {
        std::size_t n = 1;
        for (std::size_t d : shape_) n *= d;
        return n;
    }
    void require_same_shape(const Tensor& other) const {
        if (!same_shape(other)) throw std::invalid_argument("tensor shape mismatch");
    }

    std::vector<std::size_t> shape_;
    std::vector<double> data_;
};

/// Mode split of the contraction product: the leading k modes of the left
/// tensor survive, p modes are contracted, the trailing q modes of the
/// right tensor survive.
struct ContractionPlan {
    std::size_t k = 1;  ///< surviving leading modes of a, >= 1
    std::size_t p = 1;  ///< contracted modes, >= 1
    std::size_t q = 0;  ///< surviving trailing modes of b, >= 0

    void validate(const Tensor& a, const Tensor& b) const {
        if (k < 1 || p < 1)
            throw std::invalid_argument("contraction plan requires k >= 1 and p >= 1");
        if (a.order() != k + p)
            throw std::invalid_argument("left tensor order must equal k + p");
        if (b.order() != p + q)
            throw std::invalid_argument("right tensor order must equal p + q");
        for (std::size_t i = 0; i < p; ++i)
            if (a.dim(k + i) != b.dim(i))
                throw std::invalid_argument("contracted dimensions do not match");
    }
};

/// Outer (rank-one) tensor of the given vectors.
inline Tensor outer(std::span<const std::vector<double>> factors) {
    if (factors.empty())
        throw std::invalid_argument("outer product needs at least one factor");
    std::vector<std::size_t> shape;
    shape.reserve(factors.size());
    for (const auto& f : factors) {
        if (f.empty()) throw std::invalid_argument("outer factor must be nonempty");
        shape.push_back(f.size());
    }
    Tensor result(shape);
    auto out = result.data();
    out[0] = 1.0;
    std::size_t filled = 1;
    for (const auto& f : factors) {
        // expand the current prefix block by one more mode
        for (std::size_t i = filled; i-- > 0;) {
            double base = out[i];
            for (std::size_t j = f.size(); j-- > 0;)
                out[i * f.size() + j] = base * f[j];
        }
        filled *= f.size();
    }
    return result;
}

inline Tensor outer(std::initializer_list<std::vector<double>> factors) {
    std::vector<std::vector<double>> fs(factors);
    return outer(std::span<const std::vector<double>>(fs));
}

/// Inner product: sum of entrywise products over identical shapes.
inline double inner(const Tensor& a, const Tensor& b) {
    if (!a.same_shape(b))
        throw std::invalid_argument("inner product requires identical shapes");
    double s = 0.0;
    auto da = a.data(), db = b.data();
    for (std::size_t i = 0; i < da.size(); ++i) s += da[i] * db[i];
    return s;
}

/// Contraction product: keep the leading plan.k modes of a, contract plan.p
/// shared modes, keep the trailing plan.q modes of b.  With q = 0 the result
/// has order k.  Contracted indices iterate row-major (fixed summation
/// order, bitwise deterministic).
inline Tensor contract_product(const Tensor& a, const Tensor& b, const ContractionPlan& plan) {
    plan.validate(a, b);
    std::size_t nk = 1, np = 1, nq = 1;
    for (std::size_t i = 0; i < plan.k; ++i) nk *= a.dim(i);
    for (std::size_t i = 0; i < plan.p; ++i) np *= a.dim(plan.k + i);
    for (std::size_t i = 0; i < plan.q; ++i) nq *= b.dim(plan.p + i);

    std::vector<std::size_t> out_shape;
    for (std::size_t i = 0; i < plan.k; ++i) out_shape.push_back(a.dim(i));
    for (std::size_t i = 0; i < plan.q; ++i) out_shape.push_back(b.dim(plan.p + i));

    Tensor c(out_shape);
    auto da = a.data(), db = b.data();
    auto dc = c.data();
    for (std::size_t ia = 0; ia < nk; ++ia) {
        for (std::size_t ip = 0; ip < np; ++ip) {
            double av = da[ia * np + ip];
            if (av == 0.0) continue;
            for (std::size_t ib = 0; ib < nq; ++ib)
                dc[ia * nq + ib] += av * db[ip * nq + ib];
        }
    }
    return c;
}

enum class ElementwiseNorm { One, Infinity, Frobenius };

inline double elementwise_norm(const Tensor& a, ElementwiseNorm kind) {
    auto d = a.data();
    switch (kind) {
        case ElementwiseNorm::One: {
            double s = 0.0;
            for (double v : d) s += std::abs(v);
            return s;
        }
        case ElementwiseNorm::Infinity: {
            double s = 0.0;
            for (double v : d) s = std::max(s, std::abs(v));
            return s;
        }
        case ElementwiseNorm::Frobenius: {
            double s = 0.0;
            for (double v : d) s += v * v;
            return std::sqrt(s);
        }
    }
    throw std::invalid_argument("unknown elementwise norm kind");
}

inline double norm_one(const Tensor& a) { return elementwise_norm(a, ElementwiseNorm::One); }
inline double norm_inf(const Tensor& a) { return elementwise_norm(a, ElementwiseNorm::Infinity); }
inline double norm_fro(const Tensor& a) { return elementwise_norm(a, ElementwiseNorm::Frobenius); }

/// Sum over the leading modes of a against w (whose shape must equal the
/// leading modes of a); result keeps the trailing modes.
inline Tensor contract_leading(const Tensor& w, const Tensor& a) {
    if (w.order() >= a.order())
        throw std::invalid_argument("contract_leading needs order(w) < order(a)");
    std::size_t np = 1;
    for (std::size_t i = 0; i < w.order(); ++i) {
        if (w.dim(i) != a.dim(i))
            throw std::invalid_argument("contract_leading dimension mismatch");
        np *= w.dim(i);
    }
    std::vector<std::size_t> out_shape(a.shape().begin() + static_cast<std::ptrdiff_t>(w.order()),
                                       a.shape().end());
    Tensor c(out_shape);
    std::size_t nq = c.size();
    auto dw = w.data(), da = a.data();
    auto dc = c.data();
    for (std::size_t ip = 0; ip < np; ++ip) {
        double wv = dw[ip];
        if (wv == 0.0) continue;
        for (std::size_t ib = 0; ib < nq; ++ib)
            dc[ib] += wv * da[ip * nq + ib];
    }
    return c;
}

/// Sum over the trailing modes of a against w; result keeps the leading modes.
inline Tensor contract_trailing(const Tensor& a, const Tensor& w) {
    if (w.order() >= a.order())
        throw std::invalid_argument("contract_trailing needs order(w) < order(a)");
    std::size_t np = w.size();
    std::size_t off = a.order() - w.order();
    for (std::size_t i = 0; i < w.order(); ++i)
        if (w.dim(i) != a.dim(off + i))
            throw std::invalid_argument("contract_trailing dimension mismatch");
    std::vector<std::size_t> out_shape(a.shape().begin(),
                                       a.shape().begin() + static_cast<std::ptrdiff_t>(off));
    Tensor c(out_shape);
    auto da = a.data(), dw = w.data();
    auto dc = c.data();
    for (std::size_t ia = 0; ia < c.size(); ++ia) {
        double s = 0.0;
        for (std::size_t ip = 0; ip < np; ++ip)
            s += da[ia * np + ip] * dw[ip];
        dc[ia] = s;
    }
    return c;
}

/// Contract mode `mode` of a against vector v, removing that mode.
inline Tensor contract_mode(const Tensor& a, std::size_t mode, std::span<const double> v) {
    if (mode >= a.order()) throw std::invalid_argument("mode out of range");
    if (v.size() != a.dim(mode)) throw std::invalid_argument("vector length mismatch");
    if (a.order() == 1) throw std::invalid_argument("contract_mode needs order >= 2");
    std::vector<std::size_t> out_shape;
    for (std::size_t m = 0; m < a.order(); ++m)
        if (m != mode) out_shape.push_back(a.dim(m));
    Tensor c(out_shape);
    std::size_t inner_sz = 1;
    for (std::size_t m = mode + 1; m < a.order(); ++m) inner_sz *= a.dim(m);
    std::size_t nm = a.dim(mode);
    std::size_t outer_sz = a.size() / (inner_sz * nm);
    auto da = a.data();
    auto dc = c.data();
    for (std::size_t o = 0; o < outer_sz; ++o)
        for (std::size_t j = 0; j < nm; ++j) {
            double vj = v[j];
            if (vj == 0.0) continue;
            const double* src = da.data() + (o * nm + j) * inner_sz;
            double* dst = dc.data() + o * inner_sz;
            for (std::size_t i = 0; i < inner_sz; ++i) dst[i] += vj * src[i];
        }
    return c;
}

}  // namespace tennorm
