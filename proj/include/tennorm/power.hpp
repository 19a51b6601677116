#pragma once

#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nuclear.hpp"
#include "tensor.hpp"

namespace tennorm {

/// Cubic power of an order-3 tensor:
/// t(i,j,k) = sum_{s,p,q} a(i,p,q) a(s,j,q) a(s,p,k).
/// Preserves nonnegativity, symmetry (cube shapes) and diagonality.
inline Tensor cubic_power(const Tensor& a) {
    if (a.order() != 3) throw std::invalid_argument("cubic power needs an order-3 tensor");
    std::size_t d1 = a.dim(0), d2 = a.dim(1), d3 = a.dim(2);
    Tensor t({d1, d2, d3});
    auto A = [&](std::size_t i, std::size_t j, std::size_t k) {
        return a[(i * d2 + j) * d3 + k];
    };
    for (std::size_t i = 0; i < d1; ++i)
        for (std::size_t j = 0; j < d2; ++j)
            for (std::size_t k = 0; k < d3; ++k) {
                double sum = 0.0;
                for (std::size_t s = 0; s < d1; ++s)
                    for (std::size_t p = 0; p < d2; ++p)
                        for (std::size_t q = 0; q < d3; ++q)
                            sum += A(i, p, q) * A(s, j, q) * A(s, p, k);
                t[(i * d2 + j) * d3 + k] = sum;
            }
    return t;
}

enum class QuinticVariant { A, B };

/// Quintic power of an order-5 tensor.  Two inequivalent five-factor
/// contraction patterns exist; both fix unit rank-one tensors, but they
/// generally produce different results.
inline Tensor quintic_power(const Tensor& a, QuinticVariant variant) {
    if (a.order() != 5) throw std::invalid_argument("quintic power needs an order-5 tensor");
    std::size_t d1 = a.dim(0), d2 = a.dim(1), d3 = a.dim(2), d4 = a.dim(3), d5 = a.dim(4);
    Tensor t(a.shape());
    auto A = [&](std::size_t i1, std::size_t i2, std::size_t i3, std::size_t i4,
                 std::size_t i5) {
        return a[(((i1 * d2 + i2) * d3 + i3) * d4 + i4) * d5 + i5];
    };
    std::size_t out = 0;
    for (std::size_t i1 = 0; i1 < d1; ++i1)
     for (std::size_t i2 = 0; i2 < d2; ++i2)
      for (std::size_t i3 = 0; i3 < d3; ++i3)
       for (std::size_t i4 = 0; i4 < d4; ++i4)
        for (std::size_t i5 = 0; i5 < d5; ++i5, ++out) {
            double sum = 0.0;
            for (std::size_t j1 = 0; j1 < d1; ++j1)
             for (std::size_t k1 = 0; k1 < d1; ++k1)
              for (std::size_t j2 = 0; j2 < d2; ++j2)
               for (std::size_t k2 = 0; k2 < d2; ++k2)
                for (std::size_t j3 = 0; j3 < d3; ++j3)
                 for (std::size_t k3 = 0; k3 < d3; ++k3)
                  for (std::size_t j4 = 0; j4 < d4; ++j4)
                   for (std::size_t k4 = 0; k4 < d4; ++k4)
                    for (std::size_t j5 = 0; j5 < d5; ++j5)
                     for (std::size_t k5 = 0; k5 < d5; ++k5) {
                         double prod =
                             variant == QuinticVariant::A
                                 ? A(i1, j2, j3, j4, j5) * A(j1, i2, j3, j4, j5) *
                                       A(j1, j2, i3, k4, k5) * A(k1, k2, k3, i4, k5) *
                                       A(k1, k2, k3, k4, i5)
                                 : A(i1, j2, j3, j4, j5) * A(k1, i2, j3, j4, j5) *
                                       A(j1, j2, i3, k4, k5) * A(j1, k2, k3, i4, k5) *
                                       A(k1, k2, k3, k4, i5);
                         sum += prod;
                     }
            t[out] = sum;
        }
    return t;
}

enum class TensorNormKind { One, Frobenius, Infinity, NuclearUpper };

inline std::string norm_kind_name(TensorNormKind k) {
    switch (k) {
        case TensorNormKind::One: return "one";
        case TensorNormKind::Frobenius: return "fro";
        case TensorNormKind::Infinity: return "inf";
        case TensorNormKind::NuclearUpper: return "nuclear-upper";
    }
    return "?";
}

inline double tensor_norm_value(const Tensor& a, TensorNormKind k) {
    switch (k) {
        case TensorNormKind::One: return norm_one(a);
        case TensorNormKind::Frobenius: return norm_fro(a);
        case TensorNormKind::Infinity: return norm_inf(a);
        case TensorNormKind::NuclearUpper:
            return a.order() <= 2 ? (a.order() == 1 ? norm_fro(a)
                                                    : nuclear_norm(Matrix::from_tensor(a)))
                                  : nuclear_upper_greedy(a, 50, 1e-8, 0, 8).upper;
    }
    throw std::invalid_argument("unknown norm kind");
}

enum class GelfandStatus { Converged, NilpotentDetected, IterationCap };

struct GelfandRow {
    std::size_t m = 0;
    std::map<TensorNormKind, double> r_values;
    double log_scale = 0.0;  ///< L_m, with exp(L_m) = ||a^(d^m)||_F
};

struct GelfandTrace {
    std::vector<GelfandRow> rows;
    double rho_estimate = 0.0;
    GelfandStatus classification = GelfandStatus::IterationCap;
};

namespace detail {
// Entries of the raw iterate grow like rho^(d^m); anything past m ~ 6
// overflows double precision, so the iterate is kept Frobenius-normalized
// and the scale lives in the log-domain accumulator.
inline constexpr double kNilpotentFloor = 1e-12;
}  // namespace detail

/// Scaled power iteration for the Gelfand limit.  Maintains B_m with
/// ||B_m||_F = 1 and the accumulator L_m = log ||a^(d^m)||_F; the root
/// sequence under norm X is r_m = exp((L_m + log ||B_m||_X) / d^m).
inline GelfandTrace gelfand_iterate(const Tensor& a,
                                    const std::vector<TensorNormKind>& norms,
                                    std::size_t max_m = 31, double tol = 1e-10,
                                    std::optional<QuinticVariant> variant = std::nullopt) {
    if (a.order() != 3 && a.order() != 5)
        throw std::invalid_argument("gelfand iteration needs an order-3 or order-5 tensor");
    if (a.order() == 5 && !variant)
        throw std::invalid_argument("order-5 iteration needs an explicit quintic variant");
    if (max_m < 1) throw std::invalid_argument("max_m must be >= 1");
    if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");

    double degree = a.order() == 3 ? 3.0 : 5.0;
    auto apply = [&](const Tensor& b) {
        return a.order() == 3 ? cubic_power(b) : quintic_power(b, *variant);
    };

    GelfandTrace trace;
    double fro = norm_fro(a);
    if (fro == 0.0) {
        GelfandRow row;
        row.m = 0;
        row.log_scale = -std::numeric_limits<double>::infinity();
        for (auto k : norms) row.r_values[k] = 0.0;
        trace.rows.push_back(row);
        trace.rho_estimate = 0.0;
        trace.classification = GelfandStatus::NilpotentDetected;
        return trace;
    }

    Tensor b = a;
    b *= 1.0 / fro;
    double log_scale = std::log(fro);
    double power_m = 1.0;  // d^m

    auto record = [&](std::size_t m) {
        GelfandRow row;
        row.m = m;
        row.log_scale = log_scale;
        for (auto k : norms)
            row.r_values[k] =
                std::exp((log_scale + std::log(tensor_norm_value(b, k))) / power_m);
        trace.rows.push_back(row);
        trace.rho_estimate = std::exp(log_scale / power_m);  // Frobenius root
    };
    record(0);

    for (std::size_t m = 1; m <= max_m; ++m) {
        Tensor c = apply(b);
        double s = norm_fro(c);
        log_scale = degree * log_scale + std::log(s);  // -inf when s == 0
        power_m *= degree;
        if (s == 0.0) {
            GelfandRow row;
            row.m = m;
            row.log_scale = -std::numeric_limits<double>::infinity();
            for (auto k : norms) row.r_values[k] = 0.0;
            trace.rows.push_back(row);
            trace.rho_estimate = 0.0;
            trace.classification = GelfandStatus::NilpotentDetected;
            return trace;
        }
        c *= 1.0 / s;
        b = std::move(c);
        record(m);

        double r = trace.rho_estimate;
        if (r < detail::kNilpotentFloor) {
            trace.classification = GelfandStatus::NilpotentDetected;
            trace.rho_estimate = 0.0;
            return trace;
        }
        if (trace.rows.size() >= 2) {
            bool settled = true;
            const auto& prev = trace.rows[trace.rows.size() - 2];
            const auto& cur = trace.rows.back();
            for (auto k : norms)
                if (std::abs(cur.r_values.at(k) - prev.r_values.at(k)) > tol) settled = false;
            if (settled) {
                trace.classification = GelfandStatus::Converged;
                return trace;
            }
        }
    }
    trace.classification = GelfandStatus::IterationCap;
    return trace;
}

struct Classification {
    bool nilpotent = false;
    bool idempotent = false;
    double rho = 0.0;
};

inline Classification classify(const Tensor& a, std::size_t max_m = 20, double tol = 1e-10,
                               std::optional<QuinticVariant> variant = std::nullopt) {
    Classification out;
    Tensor powered = a.order() == 3 ? cubic_power(a) : quintic_power(a, variant.value());
    out.idempotent = norm_fro(powered - a) <= tol * std::max(1.0, norm_fro(a));
    GelfandTrace t = gelfand_iterate(a, {TensorNormKind::Frobenius}, max_m, tol, variant);
    out.rho = t.rho_estimate;
    out.nilpotent = t.classification == GelfandStatus::NilpotentDetected;
    return out;
}

}  // namespace tennorm
