#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <limits>

#include <tennorm/fixtures.hpp>
#include <tennorm/random.hpp>
#include <tennorm/tensor.hpp>

using namespace tennorm;

namespace {

// independent nested-loop oracle for the contraction product
Tensor contract_oracle(const Tensor& a, const Tensor& b, const ContractionPlan& plan) {
    std::vector<std::size_t> out_shape;
    for (std::size_t i = 0; i < plan.k; ++i) out_shape.push_back(a.dim(i));
    for (std::size_t i = 0; i < plan.q; ++i) out_shape.push_back(b.dim(plan.p + i));
    Tensor c(out_shape);
    std::vector<std::size_t> ia(a.order()), ib(b.order()), ic(c.order());
    std::function<void(std::size_t)> rec_out = [&](std::size_t m) {
        if (m == c.order()) {
            double sum = 0.0;
            std::function<void(std::size_t)> rec_in = [&](std::size_t pm) {
                if (pm == plan.p) {
                    for (std::size_t i = 0; i < plan.k; ++i) ia[i] = ic[i];
                    for (std::size_t i = 0; i < plan.q; ++i) ib[plan.p + i] = ic[plan.k + i];
                    sum += a.at(std::span<const std::size_t>(ia)) *
                           b.at(std::span<const std::size_t>(ib));
                    return;
                }
                for (std::size_t v = 0; v < a.dim(plan.k + pm); ++v) {
                    ia[plan.k + pm] = v;
                    ib[pm] = v;
                    rec_in(pm + 1);
                }
            };
            rec_in(0);
            c.at(std::span<const std::size_t>(ic)) = sum;
            return;
        }
        for (std::size_t v = 0; v < c.dim(m); ++v) {
            ic[m] = v;
            rec_out(m + 1);
        }
    };
    rec_out(0);
    return c;
}

}  // namespace

TEST_CASE("tensor invariants") {
    CHECK_THROWS_AS(Tensor({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Tensor(std::vector<std::size_t>{}), std::invalid_argument);
    CHECK_THROWS_AS(Tensor({2, 2}, {1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Tensor({2}, {1.0, std::numeric_limits<double>::quiet_NaN()}),
                    std::invalid_argument);
    Tensor t({2, 3, 4});
    CHECK(t.size() == 24);
    t.at({1, 2, 3}) = 5.0;
    CHECK(t[23] == 5.0);  // row-major, last index fastest
}

TEST_CASE("outer product") {
    Tensor t = outer({{1, 0}, {0, 1}});
    CHECK(t.at({0, 1}) == 1.0);
    CHECK(t.at({0, 0}) == 0.0);
    CHECK(t.at({1, 0}) == 0.0);
    CHECK(t.at({1, 1}) == 0.0);

    CHECK_THROWS_AS(outer(std::span<const std::vector<double>>{}), std::invalid_argument);
    CHECK_THROWS_AS(outer({std::vector<double>{}}), std::invalid_argument);

    // the symmetric fixture is a combination of basis outer products
    Tensor a = outer({{1, 0}, {1, 0}, {0, 1}}) + outer({{1, 0}, {0, 1}, {1, 0}}) +
               outer({{0, 1}, {1, 0}, {1, 0}}) - outer({{0, 1}, {0, 1}, {0, 1}});
    a *= 0.5;
    Tensor expected = fixtures::symmetric_half();
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == expected[i]);

    // entrywise agreement with the triple-loop product
    SplitMix64 rng(42);
    std::vector<double> x(2), y(3), z(4);
    for (auto* v : {&x, &y, &z})
        for (double& e : *v) e = rng.next_normal();
    Tensor o = outer({x, y, z});
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 4; ++k)
                CHECK(o.at({i, j, k}) == Catch::Approx(x[i] * y[j] * z[k]).epsilon(1e-14));
}

TEST_CASE("inner product") {
    Tensor a = fixtures::counterexample4();
    CHECK(inner(a, a) == 488.0);

    Tensor zero({2, 2, 2, 2});
    CHECK(inner(a, zero) == 0.0);
    CHECK_THROWS_AS(inner(a, Tensor({2, 2})), std::invalid_argument);

    // <u o v o w, x o y o z> = <u,x><v,y><w,z>
    SplitMix64 rng(7);
    auto u = random_unit_vector(3, rng), v = random_unit_vector(2, rng),
         w = random_unit_vector(4, rng);
    auto x = random_unit_vector(3, rng), y = random_unit_vector(2, rng),
         z = random_unit_vector(4, rng);
    auto dot = [](const std::vector<double>& a, const std::vector<double>& b) {
        double s = 0;
        for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
        return s;
    };
    CHECK(inner(outer({u, v, w}), outer({x, y, z})) ==
          Catch::Approx(dot(u, x) * dot(v, y) * dot(w, z)).margin(1e-12));
}

TEST_CASE("contraction product") {
    Tensor a = fixtures::counterexample4();
    Tensor c = contract_product(a, a, {2, 2, 2});
    Tensor expected = fixtures::counterexample4_product();
    for (std::size_t i = 0; i < c.size(); ++i) CHECK(c[i] == expected[i]);

    // matrices with k=p=q=1 reproduce ordinary matrix multiplication
    Tensor m1 = random_tensor({3, 3}, 1), m2 = random_tensor({3, 3}, 2);
    Tensor mm = contract_product(m1, m2, {1, 1, 1});
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            double s = 0;
            for (std::size_t k = 0; k < 3; ++k) s += m1.at({i, k}) * m2.at({k, j});
            CHECK(mm.at({i, j}) == Catch::Approx(s).margin(1e-12));
        }

    // zero annihilation
    Tensor z({2, 2, 2});
    Tensor az = contract_product(a, z, {2, 2, 1});
    CHECK(norm_fro(az) == 0.0);

    // shape mismatch
    CHECK_THROWS_AS(contract_product(a, Tensor({3, 2}), ContractionPlan{2, 2, 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(contract_product(a, a, ContractionPlan{0, 2, 2}),
                    std::invalid_argument);
}

TEST_CASE("contraction product matches the nested-loop oracle") {
    SplitMix64 rng(99);
    for (std::size_t trial = 0; trial < 25; ++trial) {
        ContractionPlan plan{1 + rng.next_u64() % 2, 1 + rng.next_u64() % 2,
                             rng.next_u64() % 3};
        std::vector<std::size_t> sa, sb;
        auto dim = [&] { return 2 + rng.next_u64() % 2; };
        for (std::size_t i = 0; i < plan.k; ++i) sa.push_back(dim());
        for (std::size_t i = 0; i < plan.p; ++i) {
            std::size_t d = dim();
            sa.push_back(d);
            sb.push_back(d);
        }
        for (std::size_t i = 0; i < plan.q; ++i) sb.push_back(dim());
        Tensor a = random_tensor(sa, rng.next_u64());
        Tensor b = random_tensor(sb, rng.next_u64());
        Tensor fast = contract_product(a, b, plan);
        Tensor slow = contract_oracle(a, b, plan);
        REQUIRE(fast.same_shape(slow));
        for (std::size_t i = 0; i < fast.size(); ++i)
            CHECK(fast[i] == Catch::Approx(slow[i]).margin(1e-12));
    }
}

TEST_CASE("contraction product is bilinear") {
    SplitMix64 rng(5);
    for (std::size_t trial = 0; trial < 20; ++trial) {
        Tensor a = random_tensor({2, 3}, rng.next_u64());
        Tensor a2 = random_tensor({2, 3}, rng.next_u64());
        Tensor b = random_tensor({3, 2}, rng.next_u64());
        ContractionPlan plan{1, 1, 1};
        double alpha = rng.next_normal();

        Tensor lhs = contract_product(alpha * a, b, plan);
        Tensor rhs = alpha * contract_product(a, b, plan);
        for (std::size_t i = 0; i < lhs.size(); ++i)
            CHECK(lhs[i] == Catch::Approx(rhs[i]).epsilon(1e-12).margin(1e-12));

        Tensor sum = contract_product(a + a2, b, plan);
        Tensor parts = contract_product(a, b, plan) + contract_product(a2, b, plan);
        for (std::size_t i = 0; i < sum.size(); ++i)
            CHECK(sum[i] == Catch::Approx(parts[i]).epsilon(1e-12).margin(1e-12));
    }
}

TEST_CASE("elementwise norms") {
    Tensor a = fixtures::gelfand_table_tensor();
    CHECK(norm_one(a) == Catch::Approx(15.6755).margin(5e-5));
    CHECK(norm_fro(a) == Catch::Approx(3.86508).margin(5e-6));
    CHECK(norm_inf(a) == Catch::Approx(1.921669).margin(1e-12));

    Tensor z({3, 2});
    CHECK(norm_one(z) == 0.0);
    CHECK(norm_fro(z) == 0.0);
    CHECK(norm_inf(z) == 0.0);

    // frobenius of a rank-one tensor factors through the vector norms
    SplitMix64 rng(3);
    std::vector<double> u(3), v(2), w(4);
    for (auto* p : {&u, &v, &w})
        for (double& e : *p) e = rng.next_normal();
    auto nrm = [](const std::vector<double>& x) {
        double s = 0;
        for (double e : x) s += e * e;
        return std::sqrt(s);
    };
    CHECK(norm_fro(outer({u, v, w})) ==
          Catch::Approx(nrm(u) * nrm(v) * nrm(w)).epsilon(1e-12));
}

TEST_CASE("1-norm and Frobenius norm are submultiplicative, infinity is not") {
    SplitMix64 rng(11);
    for (std::size_t trial = 0; trial < 200; ++trial) {
        ContractionPlan plan{1 + rng.next_u64() % 2, 1 + rng.next_u64() % 2,
                             rng.next_u64() % 2};
        std::vector<std::size_t> sa, sb;
        for (std::size_t i = 0; i < plan.k; ++i) sa.push_back(2 + rng.next_u64() % 2);
        for (std::size_t i = 0; i < plan.p; ++i) {
            std::size_t d = 2 + rng.next_u64() % 2;
            sa.push_back(d);
            sb.push_back(d);
        }
        for (std::size_t i = 0; i < plan.q; ++i) sb.push_back(2 + rng.next_u64() % 2);
        Tensor a = random_tensor(sa, rng.next_u64());
        Tensor b = random_tensor(sb, rng.next_u64());
        Tensor c = contract_product(a, b, plan);
        CHECK(norm_one(c) <= norm_one(a) * norm_one(b) * (1 + 1e-12));
        CHECK(norm_fro(c) <= norm_fro(a) * norm_fro(b) * (1 + 1e-12));
    }

    // stored counterexample: all-ones matrices
    Tensor j({2, 2}, {1, 1, 1, 1});
    Tensor jj = contract_product(j, j, {1, 1, 1});
    CHECK(norm_inf(jj) == 2.0);
    CHECK(norm_inf(jj) > norm_inf(j) * norm_inf(j));
}

TEST_CASE("random tensor determinism and distribution") {
    Tensor a = random_tensor({3, 4}, 123);
    Tensor b = random_tensor({3, 4}, 123);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);

    Tensor c = random_tensor({3, 4}, 124);
    bool differs = false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != c[i]) differs = true;
    CHECK(differs);

    // law of large numbers on a million draws
    SplitMix64 rng(77);
    double sum = 0;
    const std::size_t n = 1000000;
    for (std::size_t i = 0; i < n; ++i) sum += rng.next_normal();
    CHECK(std::abs(sum / n) < 0.01);

    Tensor u = random_tensor({100}, 5, Distribution::UniformSym);
    for (double v : u.data()) {
        CHECK(v > -1.0);
        CHECK(v < 1.0);
    }
}

TEST_CASE("full contraction agrees with inner") {
    SplitMix64 rng(21);
    for (std::size_t trial = 0; trial < 20; ++trial) {
        Tensor a = random_tensor({3, 3, 3}, rng.next_u64());
        Tensor b = random_tensor({3, 3}, rng.next_u64());
        // contract the trailing two modes, then finish with the first mode
        Tensor c = contract_product(a, b, {1, 2, 0});
        double direct = 0.0;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                for (std::size_t k = 0; k < 3; ++k)
                    direct += a.at({i, j, k}) * b.at({j, k});
        double via = 0.0;
        for (std::size_t i = 0; i < 3; ++i) via += c[i];
        CHECK(via == Catch::Approx(direct).margin(1e-12));
    }
}
