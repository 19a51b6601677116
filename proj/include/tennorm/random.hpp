#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "tensor.hpp"

namespace tennorm {

/// SplitMix64 generator (Steele, Lea, Flood 2014).  Chosen because the output
/// sequence is fully specified by integer arithmetic, so seeded runs are
/// bit-reproducible across platforms and standard libraries.  Streams are
/// split by seed derivation: sub_seed = seed XOR restart_index.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) with 53 random bits.
    double next_uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform in (-1, 1).
    double next_uniform_sym() {
        return 2.0 * next_uniform01() - 1.0;
    }

    /// Standard normal via Box-Muller; draws are cached in pairs.
    double next_normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        double u1 = next_uniform01();
        double u2 = next_uniform01();
        while (u1 <= 0.0) u1 = next_uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        double theta = 2.0 * std::numbers::pi * u2;
        cached_ = r * std::sin(theta);
        have_cached_ = true;
        return r * std::cos(theta);
    }

    static std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t index) {
        return seed ^ index;
    }

private:
    std::uint64_t state_;
    double cached_ = 0.0;
    bool have_cached_ = false;
};

enum class Distribution { StandardNormal, UniformSym };

inline Tensor random_tensor(std::vector<std::size_t> shape, std::uint64_t seed,
                            Distribution dist = Distribution::StandardNormal) {
    Tensor t(std::move(shape));
    SplitMix64 rng(seed);
    for (double& v : t.data())
        v = dist == Distribution::StandardNormal ? rng.next_normal() : rng.next_uniform_sym();
    return t;
}

/// Random vector on the unit sphere; re-draws on (measure-zero) zero vectors.
inline std::vector<double> random_unit_vector(std::size_t n, SplitMix64& rng) {
    std::vector<double> v(n);
    for (;;) {
        double nrm2 = 0.0;
        for (double& x : v) {
            x = rng.next_normal();
            nrm2 += x * x;
        }
        if (nrm2 > 0.0) {
            double inv = 1.0 / std::sqrt(nrm2);
            for (double& x : v) x *= inv;
            return v;
        }
    }
}

}  // namespace tennorm
