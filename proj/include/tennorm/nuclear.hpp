#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "linalg.hpp"
#include "random.hpp"
#include "spectral.hpp"
#include "tensor.hpp"

namespace tennorm {

/// Certified interval around the tensor nuclear norm.
struct NuclearInterval {
    double lower = 0.0;
    double upper = 0.0;
    std::vector<Matrix> lower_witness;      ///< unit-nuclear-norm matrices
    std::vector<RankOneTerm> upper_witness; ///< greedy decomposition terms
    double residual_norm = 0.0;             ///< Frobenius norm of the undecomposed rest
};

/// Crude nuclear bound for the greedy residual:
/// ||R||_* <= sqrt(prod(dims) / max_dim) * ||R||_F.
inline double residual_nuclear_bound(const Tensor& r) {
    double prod = 1.0, mx = 1.0;
    for (std::size_t d : r.shape()) {
        prod *= static_cast<double>(d);
        mx = std::max(mx, static_cast<double>(d));
    }
    return std::sqrt(prod / mx) * norm_fro(r);
}

struct NuclearUpperResult {
    double upper = 0.0;
    std::vector<RankOneTerm> terms;
    double residual_norm = 0.0;
};

/// Upper bound by greedy rank-one deflation: repeatedly subtract the best
/// rank-one approximation found by hopm and accumulate |lambda|; the
/// leftover residual enters through its crude nuclear bound.  On matrices
/// this recovers the singular value sum.
inline NuclearUpperResult nuclear_upper_greedy(const Tensor& a, std::size_t max_terms = 100,
                                               double tol = 1e-8, std::uint64_t seed = 0,
                                               std::size_t restarts = 16) {
    if (max_terms < 1) throw std::invalid_argument("max_terms must be >= 1");
    NuclearUpperResult out;
    Tensor residual = a;
    double acc = 0.0;
    for (std::size_t t = 0; t < max_terms; ++t) {
        if (norm_fro(residual) <= tol) break;
        SpectralCertificate cert =
            hopm(residual, restarts, 500, 1e-14, SplitMix64::sub_seed(seed, t * 0x10001ULL));
        if (cert.value == 0.0) break;
        // signed coefficient so subtraction cancels the extracted direction
        double lambda = inner(residual, outer(std::span<const std::vector<double>>(
                                             cert.witness.factors)));
        RankOneTerm term;
        term.coefficient = lambda;
        term.factors = cert.witness.factors;
        residual -= term.evaluate();
        acc += std::abs(lambda);
        out.terms.push_back(std::move(term));
    }
    out.residual_norm = norm_fro(residual);
    out.upper = acc + residual_nuclear_bound(residual);
    return out;
}

namespace detail {

/// Normalize a matrix to unit nuclear norm; zero matrices are refused.
inline Matrix normalize_nuclear(const Matrix& b) {
    double nn = nuclear_norm(b);
    if (nn == 0.0) throw std::invalid_argument("zero witness matrix");
    Matrix out = b;
    for (double& v : out.data()) v /= nn;
    return out;
}

}  // namespace detail

/// Lower bound from explicit witnesses: contract the trailing mode pairs of
/// a against unit-nuclear-norm matrices, leaving a vector (odd order) or a
/// matrix (even order), and return its nuclear norm.  The trailing pairs are
/// (2,3),(4,5),... for odd orders and (3,4),(5,6),... for even orders,
/// matching the contraction of the last witness first.
inline double nuclear_lower_witness(const Tensor& a, std::span<const Matrix> witnesses,
                                    std::vector<Matrix>* normalized = nullptr) {
    if (a.order() < 3)
        throw std::invalid_argument("witness bound needs order >= 3");
    std::size_t head = a.order() % 2 == 1 ? 1 : 2;
    std::size_t pairs = (a.order() - head) / 2;
    if (witnesses.size() != pairs)
        throw std::invalid_argument("need one witness per trailing mode pair");

    Tensor c = a;
    for (std::size_t j = pairs; j-- > 0;) {
        Matrix b = detail::normalize_nuclear(witnesses[j]);
        std::size_t m1 = c.order() - 2, m2 = c.order() - 1;
        if (b.rows() != c.dim(m1) || b.cols() != c.dim(m2))
            throw std::invalid_argument("witness shape mismatch");
        c = contract_trailing(c, b.to_tensor());
        if (normalized) normalized->insert(normalized->begin(), b);
    }
    return head == 1 ? norm_fro(c) : nuclear_norm(Matrix::from_tensor(c));
}

struct NuclearLowerResult {
    double lower = 0.0;
    std::vector<Matrix> witnesses;  ///< rank-one, unit nuclear norm
};

namespace detail {

/// Dual element of the nuclear norm at c: for vectors c/||c||, for matrices
/// the polar factor U V^T from the SVD (spectral norm 1 in both cases).
inline Tensor nuclear_dual(const Tensor& c) {
    if (c.order() == 1) {
        double n = norm_fro(c);
        Tensor w = c;
        if (n > 0.0) w *= 1.0 / n;
        return w;
    }
    SvdResult s = svd(Matrix::from_tensor(c));
    std::size_t r = c.dim(0), cc = c.dim(1);
    Matrix w(r, cc);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cc; ++j) {
            double v = 0.0;
            // skip null directions: their filler columns need not be orthogonal
            for (std::size_t k = 0; k < s.sigma.size(); ++k)
                if (s.sigma[k] > 1e-14 * s.sigma[0]) v += s.u(i, k) * s.v(j, k);
            w(i, j) = v;
        }
    return w.to_tensor();
}

}  // namespace detail

/// Local search maximizing the witness lower bound over rank-one witnesses
/// B_j = u_j v_j^T.  Each iteration linearizes the objective at the current
/// point via the nuclear-norm dual and replaces one witness with the top
/// singular pair of its environment matrix, which never decreases the
/// objective.
inline NuclearLowerResult nuclear_lower_search(const Tensor& a, std::size_t iterations = 50,
                                               std::uint64_t seed = 0,
                                               std::size_t restarts = 16) {
    if (a.order() < 3)
        throw std::invalid_argument("lower search needs order >= 3");
    std::size_t head = a.order() % 2 == 1 ? 1 : 2;
    std::size_t pairs = (a.order() - head) / 2;

    NuclearLowerResult best;
    if (norm_fro(a) == 0.0) {
        for (std::size_t j = 0; j < pairs; ++j) {
            std::size_t r = a.dim(head + 2 * j), c = a.dim(head + 2 * j + 1);
            Matrix b(r, c);
            b(0, 0) = 1.0;
            best.witnesses.push_back(b);
        }
        return best;
    }

    for (std::size_t rs = 0; rs < restarts; ++rs) {
        SplitMix64 rng(SplitMix64::sub_seed(seed, rs));
        std::vector<std::vector<double>> us(pairs), vs(pairs);
        for (std::size_t j = 0; j < pairs; ++j) {
            us[j] = random_unit_vector(a.dim(head + 2 * j), rng);
            vs[j] = random_unit_vector(a.dim(head + 2 * j + 1), rng);
        }
        auto witness = [&](std::size_t j) { return Matrix::from_tensor(outer({us[j], vs[j]})); };
        auto objective = [&]() {
            std::vector<Matrix> ws;
            for (std::size_t j = 0; j < pairs; ++j) ws.push_back(witness(j));
            return nuclear_lower_witness(a, ws);
        };

        double value = objective();
        for (std::size_t it = 0; it < iterations; ++it) {
            for (std::size_t j = 0; j < pairs; ++j) {
                // result at the current witnesses, then its dual
                std::vector<Matrix> ws;
                for (std::size_t jj = 0; jj < pairs; ++jj) ws.push_back(witness(jj));
                Tensor c = a;
                for (std::size_t jj = pairs; jj-- > 0;)
                    c = contract_trailing(c, ws[jj].to_tensor());
                Tensor w = detail::nuclear_dual(c);

                // environment of pair j: contract the dual on the leading
                // modes and every other witness on its pair
                Tensor env = contract_leading(w, a);
                for (std::size_t jj = pairs; jj-- > j + 1;)
                    env = contract_trailing(env, ws[jj].to_tensor());
                for (std::size_t jj = 0; jj < j; ++jj) {
                    Tensor tmp = contract_leading(ws[jj].to_tensor(), env);
                    env = std::move(tmp);
                }
                // env is now the n_{2j} x n_{2j+1} matrix; top singular pair
                SvdResult s = svd(Matrix::from_tensor(env));
                if (s.sigma.empty() || s.sigma[0] == 0.0) continue;
                for (std::size_t i = 0; i < us[j].size(); ++i) us[j][i] = s.u(i, 0);
                for (std::size_t i = 0; i < vs[j].size(); ++i) vs[j][i] = s.v(i, 0);
            }
            double next = objective();
            if (next <= value + 1e-13 * std::max(1.0, value)) {
                value = std::max(value, next);
                break;
            }
            value = next;
        }
        if (value > best.lower) {
            best.lower = value;
            best.witnesses.clear();
            for (std::size_t j = 0; j < pairs; ++j) best.witnesses.push_back(witness(j));
        }
    }
    return best;
}

/// Full certified interval.
inline NuclearInterval nuclear_interval(const Tensor& a, std::size_t max_terms = 100,
                                        double tol = 1e-8, std::uint64_t seed = 0) {
    NuclearInterval out;
    if (a.order() <= 2) {
        // exact on vectors and matrices
        double exact = a.order() == 1 ? norm_fro(a) : nuclear_norm(Matrix::from_tensor(a));
        out.lower = out.upper = exact;
        return out;
    }
    NuclearUpperResult up = nuclear_upper_greedy(a, max_terms, tol, seed);
    NuclearLowerResult lo = nuclear_lower_search(a, 50, seed);
    out.upper = up.upper;
    out.upper_witness = std::move(up.terms);
    out.residual_norm = up.residual_norm;
    out.lower = lo.lower;
    out.lower_witness = std::move(lo.witnesses);
    return out;
}

/// The j-th contraction matrix (0-based mode index): the Gram matrix of the
/// mode-j slices.  Symmetric positive semidefinite with trace ||a||_F^2.
inline SymmetricMatrix contraction_matrix(const Tensor& a, std::size_t mode) {
    if (a.order() < 2) throw std::invalid_argument("contraction matrix needs order >= 2");
    if (mode >= a.order()) throw std::invalid_argument("mode index out of range");
    std::size_t nj = a.dim(mode);
    std::size_t inner_sz = 1;
    for (std::size_t m = mode + 1; m < a.order(); ++m) inner_sz *= a.dim(m);
    std::size_t outer_sz = a.size() / (inner_sz * nj);

    SymmetricMatrix g(nj);
    auto d = a.data();
    for (std::size_t o = 0; o < outer_sz; ++o)
        for (std::size_t i = 0; i < inner_sz; ++i)
            for (std::size_t r = 0; r < nj; ++r) {
                double ar = d[(o * nj + r) * inner_sz + i];
                if (ar == 0.0) continue;
                for (std::size_t s = 0; s < nj; ++s)
                    g.entry(r, s) += ar * d[(o * nj + s) * inner_sz + i];
            }
    return g;
}

struct Prop51Report {
    double rho = 0.0;           ///< spectral radius of the contraction matrix
    double product_upper = 0.0; ///< nuclear upper bound times hopm value
    bool holds = false;
};

/// rho(A^(j)) <= ||a||_* ||a||_S, checked in the safe direction with the
/// nuclear upper bound and the hopm lower bound on the right hand side.
inline Prop51Report prop51_check(const Tensor& a, std::size_t mode, std::uint64_t seed = 0) {
    Prop51Report rep;
    SymmetricMatrix g = contraction_matrix(a, mode);
    auto ev = sym_eig(g).values;
    for (double l : ev) rep.rho = std::max(rep.rho, std::abs(l));
    double spec = hopm(a, 32, 500, 1e-13, seed).value;
    double nuc_up = a.order() <= 2 ? (a.order() == 1 ? norm_fro(a)
                                                     : nuclear_norm(Matrix::from_tensor(a)))
                                   : nuclear_upper_greedy(a, 100, 1e-8, seed).upper;
    rep.product_upper = nuc_up * spec;
    rep.holds = rep.rho <= rep.product_upper + 1e-6;
    return rep;
}

}  // namespace tennorm
