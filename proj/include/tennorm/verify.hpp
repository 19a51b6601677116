#pragma once

#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "nuclear.hpp"
#include "power.hpp"
#include "random.hpp"
#include "spectral.hpp"
#include "tensor.hpp"

namespace tennorm {

struct SuiteReport {
    std::string name;
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::vector<std::string> details;

    bool passed() const { return failures == 0; }
    void fail(const std::string& msg) {
        ++failures;
        details.push_back(msg);
    }
};

namespace detail {

/// Random (a, b, plan) triple with conforming shapes, dims <= 3.
struct RandomTriple {
    Tensor a, b;
    ContractionPlan plan;
};

inline RandomTriple random_triple(SplitMix64& rng, std::size_t max_order = 3) {
    auto dim = [&] { return 2 + rng.next_u64() % 2; };  // 2 or 3
    ContractionPlan plan;
    plan.k = 1 + rng.next_u64() % (max_order - 1);
    plan.p = 1 + rng.next_u64() % 2;
    plan.q = rng.next_u64() % 3;
    std::vector<std::size_t> sa, sb;
    for (std::size_t i = 0; i < plan.k; ++i) sa.push_back(dim());
    for (std::size_t i = 0; i < plan.p; ++i) {
        std::size_t d = dim();
        sa.push_back(d);
        sb.push_back(d);
    }
    for (std::size_t i = 0; i < plan.q; ++i) sb.push_back(dim());
    RandomTriple t;
    t.a = random_tensor(sa, rng.next_u64());
    t.b = random_tensor(sb, rng.next_u64());
    t.plan = plan;
    return t;
}

inline double nuclear_lower_cheap(const Tensor& t, std::uint64_t seed) {
    if (t.order() == 1) return norm_fro(t);
    if (t.order() == 2) return nuclear_norm(Matrix::from_tensor(t));
    return nuclear_lower_search(t, 30, seed, 6).lower;
}

inline double nuclear_upper_cheap(const Tensor& t, std::uint64_t seed) {
    if (t.order() == 1) return norm_fro(t);
    if (t.order() == 2) return nuclear_norm(Matrix::from_tensor(t));
    return nuclear_upper_greedy(t, 60, 1e-9, seed, 8).upper;
}

}  // namespace detail

/// Theorem: nuclear norm is submultiplicative under the contraction
/// product.  Safe direction: a lower bound on ||C||_* must not exceed the
/// product of upper bounds on ||A||_* and ||B||_*.
inline SuiteReport suite_theorem1(std::size_t trials, std::uint64_t seed) {
    SuiteReport rep{"theorem-1", trials};
    SplitMix64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        auto tr = detail::random_triple(rng);
        Tensor c = contract_product(tr.a, tr.b, tr.plan);
        double lc = detail::nuclear_lower_cheap(c, seed + t);
        double ua = detail::nuclear_upper_cheap(tr.a, seed + t);
        double ub = detail::nuclear_upper_cheap(tr.b, seed + t);
        if (lc > ua * ub + 1e-6) {
            std::ostringstream os;
            os << "trial " << t << ": lower(C)=" << lc << " > upper(A)*upper(B)=" << ua * ub;
            rep.fail(os.str());
        }
    }
    return rep;
}

/// Theorem: ||C||_S <= ||A||_S ||B||_*.  Safe direction: the hopm lower
/// bound on ||C||_S must not exceed the converged hopm value of A times
/// the nuclear upper bound of B.
inline SuiteReport suite_theorem2(std::size_t trials, std::uint64_t seed) {
    SuiteReport rep{"theorem-2", trials};
    SplitMix64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        auto tr = detail::random_triple(rng);
        Tensor c = contract_product(tr.a, tr.b, tr.plan);
        double sc = c.order() == 1 ? norm_fro(c) : hopm(c, 12, 300, 1e-12, seed + t).value;
        double sa = hopm(tr.a, 12, 300, 1e-12, seed + t).value;
        double ub = detail::nuclear_upper_cheap(tr.b, seed + t);
        if (sc > sa * ub + 1e-8) {
            std::ostringstream os;
            os << "trial " << t << ": spec(C)=" << sc << " > spec(A)*nuclear_upper(B)="
               << sa * ub;
            rep.fail(os.str());
        }
    }
    return rep;
}

/// 1-norm and Frobenius norm are submultiplicative (exactly computable).
inline SuiteReport suite_theorem3_positive(std::size_t trials, std::uint64_t seed) {
    SuiteReport rep{"theorem-3-positive", trials};
    SplitMix64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        auto tr = detail::random_triple(rng);
        Tensor c = contract_product(tr.a, tr.b, tr.plan);
        if (norm_one(c) > norm_one(tr.a) * norm_one(tr.b) * (1 + 1e-12))
            rep.fail("trial " + std::to_string(t) + ": 1-norm submultiplicativity violated");
        if (norm_fro(c) > norm_fro(tr.a) * norm_fro(tr.b) * (1 + 1e-12))
            rep.fail("trial " + std::to_string(t) + ": Frobenius submultiplicativity violated");
    }
    return rep;
}

/// The stored counterexamples must violate as expected: the all-ones pair
/// breaks infinity-norm submultiplicativity, and the 2x2x2x2 fixture pair
/// breaks spectral-norm submultiplicativity.
inline SuiteReport suite_theorem3_counterexamples(std::uint64_t seed) {
    SuiteReport rep{"theorem-3-counterexamples", 2};

    Tensor j({2, 2}, {1, 1, 1, 1});
    Tensor c = contract_product(j, j, {1, 1, 1});
    if (!(norm_inf(c) > norm_inf(j) * norm_inf(j)))
        rep.fail("infinity-norm counterexample did not violate");

    Tensor a = fixtures::counterexample4();
    Tensor prod = contract_product(a, a, {2, 2, 2});
    double sa = hopm(a, 32, 500, 1e-13, seed).value;
    double sc = hopm(prod, 32, 500, 1e-13, seed).value;
    if (!(sc > sa * sa))
        rep.fail("spectral-norm counterexample did not violate");
    {
        std::ostringstream os;
        os << "spec(C)=" << sc << " vs spec(A)^2=" << sa * sa;
        rep.details.push_back(os.str());
    }
    return rep;
}

/// ||A||_* ||A^-1||_* >= n and ||A||_* ||A^-1||_S >= 1 on random
/// invertible matrices; the inverse is validated against the identity
/// before either inequality is asserted.
inline SuiteReport suite_prop_p2(std::size_t trials, std::uint64_t seed, std::size_t n = 4) {
    SuiteReport rep{"prop-p2", trials};
    SplitMix64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        Matrix a(n, n);
        Matrix inv;
        for (;;) {
            for (double& v : a.data()) v = rng.next_normal();
            try {
                inv = invert(a);
            } catch (const numerical_failure&) {
                continue;  // resample near-singular draws
            }
            Matrix check = a * inv;
            for (std::size_t i = 0; i < n; ++i) check(i, i) -= 1.0;
            if (check.frobenius() <= 1e-10) break;
        }
        MatrixNorms na = matrix_norms(a);
        MatrixNorms ni = matrix_norms(inv);
        if (na.nuclear * ni.nuclear < static_cast<double>(n) * (1 - 1e-10))
            rep.fail("trial " + std::to_string(t) + ": nuclear*nuclear < n");
        if (na.nuclear * ni.spectral < 1.0 - 1e-10)
            rep.fail("trial " + std::to_string(t) + ": nuclear*spectral < 1");
    }
    return rep;
}

/// rho(A^(j)) <= nuclear_upper * spectral for every mode of random tensors.
inline SuiteReport suite_prop51(std::size_t trials, std::uint64_t seed) {
    SuiteReport rep{"prop-51", trials};
    SplitMix64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<std::size_t> shape{2, 1 + rng.next_u64() % 3, 2};
        Tensor a = random_tensor(shape, rng.next_u64());
        for (std::size_t j = 0; j < a.order(); ++j) {
            auto r = prop51_check(a, j, seed + t);
            if (!r.holds) {
                std::ostringstream os;
                os << "trial " << t << " mode " << j << ": rho=" << r.rho
                   << " > product=" << r.product_upper;
                rep.fail(os.str());
            }
        }
    }
    return rep;
}

/// Gelfand limit properties: homogeneity, the cube law, domination by the
/// 1-norm and Frobenius norm, and decay iff rho < 1.
inline SuiteReport suite_gelfand_properties(std::size_t trials, std::uint64_t seed) {
    SuiteReport rep{"gelfand-properties", trials};
    SplitMix64 rng(seed);
    std::vector<TensorNormKind> fro{TensorNormKind::Frobenius};
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<std::size_t> shape{2 + rng.next_u64() % 2, 2, 2};
        Tensor a = random_tensor(shape, rng.next_u64());
        double rho = gelfand_iterate(a, fro, 25, 1e-12).rho_estimate;

        double alpha = 0.5 + rng.next_uniform01() * 2.0;
        Tensor sa = a;
        sa *= alpha;
        double rho_scaled = gelfand_iterate(sa, fro, 25, 1e-12).rho_estimate;
        if (std::abs(rho_scaled - alpha * rho) > 1e-8 * std::max(1.0, alpha * rho))
            rep.fail("trial " + std::to_string(t) + ": homogeneity violated");

        double rho_cubed = gelfand_iterate(cubic_power(a), fro, 25, 1e-12).rho_estimate;
        if (std::abs(rho_cubed - rho * rho * rho) > 1e-6 * std::max(1.0, rho * rho * rho))
            rep.fail("trial " + std::to_string(t) + ": cube law violated");

        if (rho > norm_one(a) + 1e-9 || rho > norm_fro(a) + 1e-9)
            rep.fail("trial " + std::to_string(t) + ": norm domination violated");

        if (rho > 0.0) {
            for (double target : {0.9, 1.1}) {
                Tensor b = a;
                b *= target / rho;
                GelfandTrace tr = gelfand_iterate(b, fro, 20, 1e-18);
                // The iteration may settle (and stop) after a handful of
                // steps, so judge decay/divergence by the limiting root and
                // the sign/trend of log ||b^(3^m)||_F rather than by its
                // magnitude at a fixed m.
                double log_norm = tr.rows.back().log_scale;
                double r_last = tr.rows.back().r_values.at(TensorNormKind::Frobenius);
                if (target < 1.0 && !(r_last <= 0.95 && log_norm < -0.25))
                    rep.fail("trial " + std::to_string(t) + ": rho<1 iterate did not decay");
                if (target > 1.0 && !(r_last >= 1.05 && log_norm > 0.25))
                    rep.fail("trial " + std::to_string(t) + ": rho>1 iterate did not diverge");
            }
        }
    }
    return rep;
}

inline std::vector<std::string> suite_names() {
    return {"theorem-1",       "theorem-2", "theorem-3-positive",
            "theorem-3-counterexamples", "prop-p2",   "prop-51",
            "gelfand-properties"};
}

inline SuiteReport run_suite(const std::string& name, std::size_t trials, std::uint64_t seed) {
    if (name == "theorem-1") return suite_theorem1(trials, seed);
    if (name == "theorem-2") return suite_theorem2(trials, seed);
    if (name == "theorem-3-positive") return suite_theorem3_positive(trials, seed);
    if (name == "theorem-3-counterexamples") return suite_theorem3_counterexamples(seed);
    if (name == "prop-p2") return suite_prop_p2(trials, seed);
    if (name == "prop-51") return suite_prop51(trials, seed);
    if (name == "gelfand-properties") return suite_gelfand_properties(trials, seed);
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace tennorm
