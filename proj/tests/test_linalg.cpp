#include <catch2/catch_amalgamated.hpp>

#include <tennorm/linalg.hpp>
#include <tennorm/random.hpp>

using namespace tennorm;

TEST_CASE("symmetric eigenvalues") {
    SECTION("identity") {
        auto rep = sym_eig(SymmetricMatrix(Matrix::identity(3)));
        REQUIRE(rep.values.size() == 3);
        for (double l : rep.values) CHECK(l == Catch::Approx(1.0).margin(1e-12));
    }
    SECTION("all-ones 2x2") {
        auto rep = sym_eig(SymmetricMatrix(Matrix(2, 2, {1, 1, 1, 1})));
        CHECK(rep.values[0] == Catch::Approx(2.0).margin(1e-12));
        CHECK(rep.values[1] == Catch::Approx(0.0).margin(1e-12));
    }
    SECTION("3J - I/3") {
        Matrix m(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) m(i, j) = 3.0 - (i == j ? 1.0 / 3.0 : 0.0);
        auto rep = sym_eig(SymmetricMatrix(m));
        CHECK(rep.values[0] == Catch::Approx(26.0 / 3.0).margin(1e-10));
        CHECK(rep.values[1] == Catch::Approx(-1.0 / 3.0).margin(1e-10));
        CHECK(rep.values[2] == Catch::Approx(-1.0 / 3.0).margin(1e-10));
    }
    SECTION("eigenvalue sum equals trace") {
        SplitMix64 rng(1);
        for (std::size_t trial = 0; trial < 20; ++trial) {
            std::size_t n = 2 + rng.next_u64() % 6;
            Matrix m(n, n);
            for (double& v : m.data()) v = rng.next_normal();
            SymmetricMatrix s(m);
            auto rep = sym_eig(s);
            double sum = 0, trace = 0;
            for (double l : rep.values) sum += l;
            for (std::size_t i = 0; i < n; ++i) trace += s(i, i);
            CHECK(sum == Catch::Approx(trace).epsilon(1e-10).margin(1e-10));
        }
    }
    SECTION("invariance under orthogonal similarity") {
        SplitMix64 rng(2);
        std::size_t n = 4;
        Matrix m(n, n);
        for (double& v : m.data()) v = rng.next_normal();
        SymmetricMatrix s(m);
        auto base = sym_eig(s).values;

        // random orthogonal Q from Givens rotations
        Matrix q = Matrix::identity(n);
        for (std::size_t r = 0; r < 10; ++r) {
            std::size_t i = rng.next_u64() % n, j = rng.next_u64() % n;
            if (i == j) continue;
            double th = rng.next_uniform01() * 6.28318530717958647692;
            Matrix g = Matrix::identity(n);
            g(i, i) = std::cos(th);
            g(j, j) = std::cos(th);
            g(i, j) = -std::sin(th);
            g(j, i) = std::sin(th);
            q = q * g;
        }
        Matrix rotated = q.transposed() * s.matrix() * q;
        auto ev = sym_eig(SymmetricMatrix(rotated)).values;
        for (std::size_t i = 0; i < n; ++i)
            CHECK(ev[i] == Catch::Approx(base[i]).margin(1e-10));
    }
}

TEST_CASE("singular values") {
    SECTION("all-ones matrices are rank one") {
        auto r2 = singular_values(Matrix(2, 2, {1, 1, 1, 1}));
        CHECK(r2.values[0] == Catch::Approx(2.0).margin(1e-12));
        CHECK(r2.values[1] == Catch::Approx(0.0).margin(1e-12));

        auto r3 = singular_values(Matrix(3, 3, std::vector<double>(9, 1.0)));
        CHECK(r3.values[0] == Catch::Approx(3.0).margin(1e-12));
        CHECK(r3.values[1] == Catch::Approx(0.0).margin(1e-12));
        CHECK(r3.values[2] == Catch::Approx(0.0).margin(1e-12));
        CHECK(nuclear_norm(Matrix(3, 3, std::vector<double>(9, 1.0))) ==
              Catch::Approx(3.0).margin(1e-10));
    }
    SECTION("identity nuclear norm is n") {
        for (std::size_t n : {2, 4, 7})
            CHECK(nuclear_norm(Matrix::identity(n)) ==
                  Catch::Approx(static_cast<double>(n)).margin(1e-10));
        CHECK(spectral_norm(Matrix::identity(5)) == Catch::Approx(1.0).margin(1e-12));
    }
    SECTION("sigma^2 sums to the squared Frobenius norm") {
        SplitMix64 rng(3);
        for (std::size_t trial = 0; trial < 20; ++trial) {
            std::size_t r = 2 + rng.next_u64() % 4, c = 2 + rng.next_u64() % 4;
            Matrix m(r, c);
            for (double& v : m.data()) v = rng.next_normal();
            auto sv = singular_values(m).values;
            double s2 = 0;
            for (double s : sv) {
                CHECK(s >= 0.0);
                s2 += s * s;
            }
            CHECK(s2 == Catch::Approx(m.frobenius() * m.frobenius()).epsilon(1e-10));
        }
    }
    SECTION("svd reconstructs the matrix") {
        SplitMix64 rng(4);
        Matrix m(4, 3);
        for (double& v : m.data()) v = rng.next_normal();
        SvdResult s = svd(m);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                double v = 0;
                for (std::size_t k = 0; k < s.sigma.size(); ++k)
                    v += s.u(i, k) * s.sigma[k] * s.v(j, k);
                CHECK(v == Catch::Approx(m(i, j)).margin(1e-10));
            }
    }
}

TEST_CASE("matrix norms") {
    SECTION("nuclear dominates spectral; equality at rank one") {
        SplitMix64 rng(5);
        for (std::size_t trial = 0; trial < 20; ++trial) {
            Matrix m(3, 3);
            for (double& v : m.data()) v = rng.next_normal();
            MatrixNorms n = matrix_norms(m);
            CHECK(n.nuclear >= n.spectral - 1e-12);
        }
        auto u = random_unit_vector(3, rng);
        auto v = random_unit_vector(4, rng);
        Matrix r1(3, 4);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 4; ++j) r1(i, j) = 2.5 * u[i] * v[j];
        MatrixNorms n = matrix_norms(r1);
        CHECK(n.nuclear == Catch::Approx(n.spectral).margin(1e-10));
    }
    SECTION("powers of a nuclear contraction shrink") {
        SplitMix64 rng(6);
        Matrix m(3, 3);
        for (double& v : m.data()) v = rng.next_normal();
        double scale = 0.9 / matrix_norms(m).nuclear;
        for (double& v : m.data()) v *= scale;
        Matrix p = m;
        double prev = matrix_norms(p).nuclear;
        for (int k = 0; k < 16; ++k) {
            p = p * m;
            double cur = matrix_norms(p).nuclear;
            CHECK(cur <= prev + 1e-12);
            prev = cur;
        }
        CHECK(prev < 1e-1);
    }
}

TEST_CASE("inversion and the invertible-matrix inequalities") {
    SplitMix64 rng(7);
    for (std::size_t trial = 0; trial < 10; ++trial) {
        Matrix a(4, 4);
        for (double& v : a.data()) v = rng.next_normal();
        Matrix inv;
        try {
            inv = invert(a);
        } catch (const numerical_failure&) {
            continue;
        }
        Matrix check = a * inv;
        for (std::size_t i = 0; i < 4; ++i) check(i, i) -= 1.0;
        REQUIRE(check.frobenius() <= 1e-10);

        MatrixNorms na = matrix_norms(a), ni = matrix_norms(inv);
        CHECK(na.nuclear * ni.nuclear >= 4.0 - 1e-9);
        CHECK(na.nuclear * ni.spectral >= 1.0 - 1e-9);
    }
    CHECK_THROWS_AS(invert(Matrix(2, 3)), std::invalid_argument);
    CHECK_THROWS_AS(invert(Matrix(2, 2, {1, 1, 1, 1})), numerical_failure);
}

TEST_CASE("spectral radius") {
    CHECK(spectral_radius(Matrix::identity(3)) == Catch::Approx(1.0).margin(1e-10));
    Matrix rot(2, 2, {0, -1, 1, 0});
    // non-symmetric: power iteration on an orthogonal matrix stays at 1
    CHECK(spectral_radius(rot) == Catch::Approx(1.0).margin(1e-8));
    CHECK_THROWS_AS(spectral_radius(Matrix(2, 3)), std::invalid_argument);
}
