#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "linalg.hpp"
#include "random.hpp"
#include "tensor.hpp"

namespace tennorm {

/// Scalar coefficient times an outer product of unit vectors.
struct RankOneTerm {
    double coefficient = 0.0;
    std::vector<std::vector<double>> factors;  ///< one unit vector per mode

    Tensor evaluate() const {
        Tensor t = outer(std::span<const std::vector<double>>(factors));
        t *= coefficient;
        return t;
    }
};

/// Best rank-one inner product found by the power method.  The value is a
/// certified lower bound on the spectral norm; `converged` reports whether
/// the best restart's sweep values settled below tolerance.
struct SpectralCertificate {
    double value = 0.0;
    RankOneTerm witness;
    std::size_t restarts_used = 0;
    std::uint64_t best_restart_seed = 0;
    bool converged = false;
    std::vector<double> sweep_values;  ///< objective per sweep of the best restart
};

namespace detail {

/// One full HOPM pass from the given starting factors.  Factor updates use
/// the normalized mode contraction against all other factors; the objective
/// |<a, u1 o ... o uk>| is non-decreasing across updates.
inline double hopm_single(const Tensor& a, std::vector<std::vector<double>>& factors,
                          std::size_t max_sweeps, double tol, bool& converged,
                          std::vector<double>* sweep_log, SplitMix64& rng) {
    std::size_t k = a.order();
    converged = false;
    double value = 0.0;
    for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
        double prev = value;
        for (std::size_t m = 0; m < k; ++m) {
            // contract all modes except m
            Tensor v = a;
            // contract from the top so remaining mode positions stay stable
            for (std::size_t mm = k; mm-- > 0;) {
                if (mm == m) continue;
                v = contract_mode(v, mm, factors[mm]);
            }
            double nrm = 0.0;
            for (double x : v.data()) nrm += x * x;
            nrm = std::sqrt(nrm);
            if (nrm == 0.0) {
                // degenerate contraction: re-randomize this factor and move on
                factors[m] = random_unit_vector(a.dim(m), rng);
                continue;
            }
            for (std::size_t i = 0; i < factors[m].size(); ++i)
                factors[m][i] = v[i] / nrm;
            value = nrm;
        }
        if (sweep_log) sweep_log->push_back(value);
        if (sweep > 0 && std::abs(value - prev) <= tol * std::max(1.0, value)) {
            converged = true;
            break;
        }
    }
    return value;
}

}  // namespace detail

/// Multistart higher-order power method for the spectral norm (best rank-one
/// inner product).  Deterministic for a fixed seed; restart r draws its
/// factors from sub-seed seed XOR r; ties keep the first restart.
inline SpectralCertificate hopm(const Tensor& a, std::size_t restarts = 32,
                                std::size_t max_sweeps = 200, double tol = 1e-12,
                                std::uint64_t seed = 0) {
    if (restarts < 1) throw std::invalid_argument("restarts must be >= 1");
    SpectralCertificate cert;
    cert.restarts_used = restarts;

    double fro = norm_fro(a);
    if (fro == 0.0) {
        cert.value = 0.0;
        cert.converged = true;
        cert.witness.coefficient = 0.0;
        for (std::size_t m = 0; m < a.order(); ++m) {
            std::vector<double> e(a.dim(m), 0.0);
            e[0] = 1.0;
            cert.witness.factors.push_back(std::move(e));
        }
        return cert;
    }

    if (a.order() == 1) {
        // spectral norm of a vector is its 2-norm
        cert.value = fro;
        cert.converged = true;
        std::vector<double> u(a.data().begin(), a.data().end());
        for (double& x : u) x /= fro;
        cert.witness.coefficient = fro;
        cert.witness.factors.push_back(std::move(u));
        return cert;
    }

    for (std::size_t r = 0; r < restarts; ++r) {
        std::uint64_t sub = SplitMix64::sub_seed(seed, r);
        SplitMix64 rng(sub);
        std::vector<std::vector<double>> factors;
        for (std::size_t m = 0; m < a.order(); ++m)
            factors.push_back(random_unit_vector(a.dim(m), rng));
        bool conv = false;
        std::vector<double> log;
        double value = detail::hopm_single(a, factors, max_sweeps, tol, conv, &log, rng);
        if (value > cert.value) {
            cert.value = value;
            cert.converged = conv;
            cert.best_restart_seed = sub;
            cert.witness.coefficient = value;
            cert.witness.factors = std::move(factors);
            cert.sweep_values = std::move(log);
        }
    }
    return cert;
}

/// Grid search over spherical angles for tiny tensors (order <= 3, every
/// dimension <= 3).  All factors but the last are enumerated on the angle
/// grid; the last factor is solved in closed form, so the result is within
/// the Lipschitz gap ||a||_F * order * pi / grid_points of the true maximum.
inline double spectral_bruteforce(const Tensor& a, std::size_t grid_points_per_angle) {
    if (a.order() > 3)
        throw std::invalid_argument("bruteforce supports order <= 3 only");
    for (std::size_t m = 0; m < a.order(); ++m)
        if (a.dim(m) > 3)
            throw std::invalid_argument("bruteforce supports dimensions <= 3 only");
    if (grid_points_per_angle < 2)
        throw std::invalid_argument("grid needs at least 2 points per angle");

    if (a.order() == 1) return norm_fro(a);

    // enumerate unit vectors of the given dimension on the angle grid
    auto enumerate = [&](std::size_t dim, auto&& yield) {
        std::size_t g = grid_points_per_angle;
        if (dim == 1) {
            yield(std::vector<double>{1.0});
            yield(std::vector<double>{-1.0});
        } else if (dim == 2) {
            for (std::size_t i = 0; i < g; ++i) {
                double th = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(g);
                yield(std::vector<double>{std::cos(th), std::sin(th)});
            }
        } else {
            for (std::size_t i = 0; i <= g; ++i) {
                double th = std::numbers::pi * static_cast<double>(i) / static_cast<double>(g);
                for (std::size_t j = 0; j < g; ++j) {
                    double ph = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(g);
                    yield(std::vector<double>{std::sin(th) * std::cos(ph),
                                              std::sin(th) * std::sin(ph), std::cos(th)});
                }
            }
        }
    };

    double best = 0.0;
    if (a.order() == 2) {
        enumerate(a.dim(0), [&](const std::vector<double>& u) {
            Tensor v = contract_mode(a, 0, u);
            best = std::max(best, norm_fro(v));
        });
    } else {
        enumerate(a.dim(0), [&](const std::vector<double>& u) {
            Tensor au = contract_mode(a, 0, u);
            enumerate(a.dim(1), [&](const std::vector<double>& v) {
                Tensor auv = contract_mode(au, 0, v);
                best = std::max(best, norm_fro(auv));
            });
        });
    }
    return best;
}

inline double bruteforce_gap(const Tensor& a, std::size_t grid_points_per_angle) {
    return norm_fro(a) * static_cast<double>(a.order()) * std::numbers::pi /
           static_cast<double>(grid_points_per_angle);
}

/// Lower bound on the spectral norm by sampling unit-nuclear-norm rank-one
/// matrices B = u v^T, contracting them against the last two modes, and
/// taking the spectral norm of the result.  The supremum over all such B
/// equals the spectral norm; the rank-one restriction loses nothing since
/// the maximum over the nuclear unit ball is attained at an extreme point.
inline double spectral_alt_formula(const Tensor& a, std::size_t samples,
                                   std::uint64_t seed = 0) {
    if (a.order() < 3)
        throw std::invalid_argument("alternative formula needs order >= 3");
    std::size_t n1 = a.dim(a.order() - 2), n2 = a.dim(a.order() - 1);
    double best = 0.0;
    for (std::size_t s = 0; s < samples; ++s) {
        SplitMix64 rng(SplitMix64::sub_seed(seed, s));
        auto u = random_unit_vector(n1, rng);
        auto v = random_unit_vector(n2, rng);
        Tensor b = outer({u, v});
        Tensor c = contract_trailing(a, b);
        double val = c.order() >= 1 && c.size() > 0
                         ? (c.order() == 1 ? norm_fro(c)
                                           : hopm(c, 8, 200, 1e-12,
                                                  SplitMix64::sub_seed(seed, s ^ 0x5eedULL)).value)
                         : 0.0;
        best = std::max(best, val);
    }
    return best;
}

}  // namespace tennorm
