#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dasub/toeplitz.hpp"
#include "dasub/transport.hpp"

using namespace dasub;

namespace {

TruncationSpec window(int n_max) {
    TruncationSpec t;
    t.tail_tol = 1e-15;
    t.n_max = n_max;
    return t;
}

}  // namespace

TEST_CASE("closed-form shift weights") {
    CHECK(std::abs(shift_weight(2, 0.5, ShiftOp::T1, 0, 0) - 1.0) < 1e-14);
    for (int n = 0; n < 10; ++n)
        CHECK(std::abs(shift_weight(1, 0.5, ShiftOp::T2, 0, n) - std::sqrt(0.75)) < 1e-14);
    for (int r = 0; r < 3; ++r)
        for (int n = 0; n < 5; ++n) {
            if (r + 1 < 4) CHECK(std::abs(shift_weight(4, 0.0, ShiftOp::T1, r, n) - std::sqrt((r + 1.0) / (r + n + 1.0))) < 1e-15);
            CHECK(std::abs(shift_weight(4, 0.0, ShiftOp::T2, r, n) - std::sqrt((n + 1.0) / (r + n + 1.0))) < 1e-15);
        }
    // norm-ratio references at 40 digits
    CHECK(std::abs(shift_weight(3, 0.4, ShiftOp::T1, 1, 2) - 0.7817359599705716) < 1e-14);
    CHECK(std::abs(shift_weight(3, 0.4, ShiftOp::T2, 1, 2) - 0.6824410644529042) < 1e-14);
    CHECK(std::abs(shift_weight(3, 0.4, ShiftOp::T1, 2, 2) - 0.6951413356361907) < 1e-14);
}

TEST_CASE("matrix entries agree with closed weights") {
    for (ShiftOp op : {ShiftOp::T1, ShiftOp::T1Adj, ShiftOp::T2, ShiftOp::T2Adj}) {
        const ChainOperatorMatrix M = toeplitz_matrix(3, 0.4, 0.6, op, window(6));
        for (const ChainIndex& c : chain_grid(3, 6)) {
            const ChainIndex target = shift_target(3, op, c);
            if (!M.in_window(target)) continue;
            CHECK(std::abs(M.at(target, c) - shift_weight(3, 0.4, op, c.r, c.n, 0.6)) < 1e-12);
        }
    }
}

TEST_CASE("adjoint pairs are conjugate transposes") {
    const ChainOperatorMatrix A = toeplitz_matrix(2, 0.5, 0.3, ShiftOp::T1, window(5));
    const ChainOperatorMatrix B = toeplitz_matrix(2, 0.5, 0.3, ShiftOp::T1Adj, window(5));
    for (const auto& [key, v] : A.entries) CHECK(std::abs(B.at(key.second, key.first) - std::conj(v)) < 1e-13);
    const ChainOperatorMatrix C = toeplitz_matrix(3, 0.2, 0.0, ShiftOp::T2, window(5));
    const ChainOperatorMatrix D = toeplitz_matrix(3, 0.2, 0.0, ShiftOp::T2Adj, window(5));
    for (const auto& [key, v] : C.entries)
        if (D.in_window(key.first)) CHECK(std::abs(D.at(key.second, key.first) - std::conj(v)) < 1e-13);
}

TEST_CASE("a full T1 cycle multiplies by eps") {
    // T1^k maps beta_{r,n} to z1^k beta_{r,n}, which equals eps e^{it} beta_{r,n} in the quotient
    for (int k : {1, 2, 3, 5})
        for (int n : {0, 4}) {
            Complex prod = 1.0;
            for (int r = 0; r < k; ++r) prod *= shift_weight(k, 0.35, ShiftOp::T1, r, n, 0.8);
            CHECK(std::abs(prod - std::polar(0.35, 0.8)) < 1e-13);
        }
}

TEST_CASE("conjugation residual") {
    const ConjugationResidual res = conjugation_residual(2, 0.5, ShiftOp::T2, window(60));
    CHECK(res.max_interior <= 1e-10);
    const ConjugationResidual zero = conjugation_residual(3, 0.0, ShiftOp::T1, window(10));
    CHECK(zero.max_interior == 0.0);
    CHECK(zero.max_wrap == 0.0);
}

TEST_CASE("compactness profile") {
    const auto d1 = compactness_profile(2, 0.5, ShiftOp::T1, 200);
    CHECK(d1[200] < 1e-6);
    CHECK(std::abs(limit_phase(2, 0.5, ShiftOp::T1) - std::polar(1.0, 2.0 * std::numbers::pi / 2.0)) < 1e-15);
    CHECK(std::abs(limit_phase(2, 0.5, ShiftOp::T2) + 1.0) < 1e-15);
    const auto d2 = compactness_profile(2, 0.5, ShiftOp::T2, 200);
    CHECK(d2[200] < 1e-6);
}

TEST_CASE("operator names") {
    for (ShiftOp op : {ShiftOp::T1, ShiftOp::T1Adj, ShiftOp::T2, ShiftOp::T2Adj}) CHECK(parse_shift_op(to_string(op)) == op);
    CHECK_THROWS(parse_shift_op("T3"));
}
