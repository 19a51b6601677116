#include <catch2/catch_amalgamated.hpp>

#include <tennorm/fixtures.hpp>
#include <tennorm/nuclear.hpp>
#include <tennorm/spectral.hpp>

using namespace tennorm;

TEST_CASE("hopm on the worked examples") {
    SECTION("2x2x2x2 counterexample factor") {
        auto cert = hopm(fixtures::counterexample4(), 32, 500, 1e-13, 0);
        CHECK(cert.value == Catch::Approx(16.3609).margin(1e-3));
    }
    SECTION("symmetric 2x2x2") {
        auto cert = hopm(fixtures::symmetric_half(), 32, 500, 1e-13, 0);
        CHECK(cert.value == Catch::Approx(0.5).margin(1e-6));
    }
    SECTION("nilpotent 2x2x2") {
        auto cert = hopm(fixtures::nilpotent_symmetric(), 32, 500, 1e-13, 0);
        CHECK(cert.value == Catch::Approx(1.0).margin(1e-6));
    }
    SECTION("zero tensor") {
        auto cert = hopm(Tensor({2, 2, 2}), 4, 100, 1e-12, 0);
        CHECK(cert.value == 0.0);
        CHECK(cert.converged);
        REQUIRE(cert.witness.factors.size() == 3);
        for (const auto& f : cert.witness.factors) {
            double n = 0;
            for (double v : f) n += v * v;
            CHECK(n == Catch::Approx(1.0).margin(1e-12));
        }
    }
    SECTION("order-1 tensor") {
        Tensor v({3}, {3, 0, 4});
        CHECK(hopm(v, 1, 10, 1e-12, 0).value == Catch::Approx(5.0).margin(1e-12));
    }
}

TEST_CASE("hopm certificate invariants") {
    SplitMix64 rng(10);
    for (std::size_t trial = 0; trial < 10; ++trial) {
        Tensor a = random_tensor({2, 3, 2}, rng.next_u64());
        auto cert = hopm(a, 8, 300, 1e-13, trial);

        // witness reproduces the reported value
        Tensor w = outer(std::span<const std::vector<double>>(cert.witness.factors));
        CHECK(std::abs(inner(a, w)) == Catch::Approx(cert.value).margin(1e-10));

        // each factor is unit
        for (const auto& f : cert.witness.factors) {
            double n = 0;
            for (double v : f) n += v * v;
            CHECK(n == Catch::Approx(1.0).margin(1e-10));
        }

        // bounded by the Frobenius norm
        CHECK(cert.value <= norm_fro(a) + 1e-12);

        // monotone sweep values within the best restart
        for (std::size_t i = 1; i < cert.sweep_values.size(); ++i)
            CHECK(cert.sweep_values[i] >= cert.sweep_values[i - 1] - 1e-12);

        // sign symmetry
        Tensor neg = -1.0 * a;
        CHECK(hopm(neg, 8, 300, 1e-13, trial).value ==
              Catch::Approx(cert.value).margin(1e-8));
    }
}

TEST_CASE("brute-force grid oracle") {
    SECTION("symmetric 2x2x2 fixture") {
        double v = spectral_bruteforce(fixtures::symmetric_half(), 720);
        CHECK(v == Catch::Approx(0.5).margin(0.01));
    }
    SECTION("unit rank-one") {
        double v = spectral_bruteforce(fixtures::rank_one_unit3(), 360);
        CHECK(v == Catch::Approx(1.0).margin(bruteforce_gap(fixtures::rank_one_unit3(), 360)));
    }
    SECTION("zero tensor") {
        CHECK(spectral_bruteforce(Tensor({2, 2, 2}), 64) == 0.0);
    }
    SECTION("oversized inputs refused") {
        CHECK_THROWS_AS(spectral_bruteforce(Tensor({4, 2, 2}), 64), std::invalid_argument);
        CHECK_THROWS_AS(spectral_bruteforce(Tensor({2, 2, 2, 2}), 64), std::invalid_argument);
    }
    SECTION("agrees with hopm on random 2x2x2 tensors") {
        SplitMix64 rng(20);
        for (std::size_t trial = 0; trial < 10; ++trial) {
            Tensor a = random_tensor({2, 2, 2}, rng.next_u64());
            double grid = spectral_bruteforce(a, 360);
            double pm = hopm(a, 16, 300, 1e-13, trial).value;
            CHECK(std::abs(grid - pm) <= bruteforce_gap(a, 360));
            CHECK(grid <= pm + 1e-9);  // grid never beats the true max
        }
    }
}

TEST_CASE("alternative spectral-norm formula") {
    SECTION("symmetric 2x2x2 fixture") {
        double v = spectral_alt_formula(fixtures::symmetric_half(), 64, 0);
        CHECK(v >= 0.49);
        CHECK(v <= 0.5 + 1e-6);
    }
    SECTION("zero tensor") {
        CHECK(spectral_alt_formula(Tensor({2, 2, 2}), 8, 0) == 0.0);
    }
    SECTION("never exceeds the hopm value") {
        SplitMix64 rng(30);
        for (std::size_t trial = 0; trial < 10; ++trial) {
            Tensor a = random_tensor({2, 2, 2}, rng.next_u64());
            double alt = spectral_alt_formula(a, 32, trial);
            double pm = hopm(a, 16, 300, 1e-13, trial).value;
            CHECK(alt <= pm + 1e-8);
        }
    }
    SECTION("order restriction") {
        CHECK_THROWS_AS(spectral_alt_formula(Tensor({2, 2}), 4, 0), std::invalid_argument);
    }
}

TEST_CASE("spectral norm never exceeds the nuclear upper bound") {
    SplitMix64 rng(40);
    for (std::size_t trial = 0; trial < 20; ++trial) {
        Tensor a = random_tensor({2, 2, 3}, rng.next_u64());
        double spec = hopm(a, 12, 300, 1e-13, trial).value;
        double nuc_up = nuclear_upper_greedy(a, 60, 1e-9, trial, 8).upper;
        CHECK(spec <= nuc_up + 1e-8);
    }
}

TEST_CASE("spectral norm is not submultiplicative (stored instance)") {
    Tensor a = fixtures::counterexample4();
    Tensor c = contract_product(a, a, {2, 2, 2});
    double sa = hopm(a, 32, 500, 1e-13, 0).value;
    double sc = hopm(c, 32, 500, 1e-13, 0).value;
    CHECK(sc > sa * sa);
    CHECK(sc >= 271.5503 - 1e-2);
    CHECK(sa * sa == Catch::Approx(267.679).margin(0.05));
}
