#pragma once

#include "tensor.hpp"

namespace tennorm::fixtures {

/// Symmetric 2x2x2 tensor with entries 1/2 at (1,1,2),(1,2,1),(2,1,1) and
/// -1/2 at (2,2,2).  Spectral norm 0.5, nuclear norm 2, every contraction
/// matrix equals 0.5 I.
inline Tensor symmetric_half() {
    Tensor a({2, 2, 2});
    a.at({0, 0, 1}) = 0.5;
    a.at({0, 1, 0}) = 0.5;
    a.at({1, 0, 0}) = 0.5;
    a.at({1, 1, 1}) = -0.5;
    return a;
}

/// Symmetric 3x3x3x3 tensor: all-ones rank-one minus the three basis
/// fourth powers (ones everywhere except zeros on the superdiagonal).
/// Nuclear norm 12.
inline Tensor ones_minus_diagonal4() {
    Tensor a({3, 3, 3, 3});
    for (double& v : a.data()) v = 1.0;
    a.at({0, 0, 0, 0}) = 0.0;
    a.at({1, 1, 1, 1}) = 0.0;
    a.at({2, 2, 2, 2}) = 0.0;
    return a;
}

/// 2x2x2x2 tensor of the spectral-norm counterexample (paired with itself
/// under the k=p=q=2 product it yields a product whose spectral norm
/// exceeds the product of the factor spectral norms).
inline Tensor counterexample4() {
    Tensor a({2, 2, 2, 2});
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l, double v) {
        a.at({i - 1, j - 1, k - 1, l - 1}) = v;
    };
    set(1, 1, 1, 1, 2);  set(1, 2, 1, 1, 3);  set(2, 1, 1, 1, -6); set(2, 2, 1, 1, 3);
    set(1, 1, 2, 1, -6); set(1, 2, 2, 1, 3);  set(2, 1, 2, 1, 4);  set(2, 2, 2, 1, 3);
    set(1, 1, 1, 2, 3);  set(1, 2, 1, 2, 9);  set(2, 1, 1, 2, 3);  set(2, 2, 1, 2, -3);
    set(1, 1, 2, 2, 3);  set(1, 2, 2, 2, -3); set(2, 1, 2, 2, 3);  set(2, 2, 2, 2, 15);
    return a;
}

/// Product of counterexample4 with itself under k=p=q=2.  The published
/// table prints 1252 at (2,2,2,2); the product of the published factor
/// entries gives 252, and the published spectral norm 271.5503 matches
/// the 252 reading, so 252 is used here.
inline Tensor counterexample4_product() {
    Tensor c({2, 2, 2, 2});
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l, double v) {
        c.at({i - 1, j - 1, k - 1, l - 1}) = v;
    };
    set(1, 1, 1, 1, 58);  set(1, 2, 1, 1, 6);   set(2, 1, 1, 1, -18); set(2, 2, 1, 1, 24);
    set(1, 1, 2, 1, -18); set(1, 2, 2, 1, 12);  set(2, 1, 2, 1, 70);  set(2, 2, 2, 1, 30);
    set(1, 1, 1, 2, 6);   set(1, 2, 1, 2, 108); set(2, 1, 1, 2, 12);  set(2, 2, 1, 2, -54);
    set(1, 1, 2, 2, 24);  set(1, 2, 2, 2, -54); set(2, 1, 2, 2, 30);  set(2, 2, 2, 2, 252);
    return c;
}

/// Symmetric nilpotent 2x2x2 tensor: a(1,1,1) = -1, a(1,2,2) = a(2,1,2) =
/// a(2,2,1) = 1.  Its cubic power is exactly zero; spectral norm 1.
inline Tensor nilpotent_symmetric() {
    Tensor a({2, 2, 2});
    a.at({0, 0, 0}) = -1.0;
    a.at({0, 1, 1}) = 1.0;
    a.at({1, 0, 1}) = 1.0;
    a.at({1, 1, 0}) = 1.0;
    return a;
}

/// Unit rank-one order-3 tensor (idempotent under the cubic power).
inline Tensor rank_one_unit3() {
    return outer({{1.0, 0.0}, {0.6, 0.8}, {0.0, 1.0}});
}

/// The randomly generated tensor of the published 31-row Gelfand table.
/// The table's header says 4x2x2 but lists 24 values; only the 4x3x2
/// reading (row i, column k*3+j of the printed block) reproduces the
/// table's m=0 norms and every later row, so that reading is used.
inline Tensor gelfand_table_tensor() {
    const double rows[4][6] = {
        {-0.512159, -0.507535, -1.383216, 0.203856, -0.578312, 1.921669},
        {0.906334, -0.258462, -0.982083, 0.736707, 0.608575, -1.063641},
        {-0.731184, 0.525138, -1.347676, -0.782006, 0.568222, -0.214013},
        {-0.086664, -0.736508, 0.474856, 0.345770, 0.194509, 0.006420}};
    Tensor a({4, 3, 2});
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                a.at({i, j, k}) = rows[i][k * 3 + j];
    return a;
}

/// Unit rank-one order-5 tensor at dimensions 2 (quintic idempotence).
inline Tensor rank_one_unit5() {
    return outer({{1.0, 0.0}, {0.6, 0.8}, {0.0, 1.0}, {0.8, -0.6}, {1.0, 0.0}});
}

}  // namespace tennorm::fixtures
