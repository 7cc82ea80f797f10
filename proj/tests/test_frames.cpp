#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dasub/frames.hpp"

using namespace dasub;

namespace {

TruncationSpec tight() {
    TruncationSpec t;
    t.tail_tol = 1e-15;
    return t;
}

// coefficient at z1^{r+kq} z2^n, checked against the orthonormal coordinate
Complex raw(const FrameVector& v, int q) {
    const MonomialIndex mi = v.monomial(q);
    const Complex c = v.coeff_q(q);
    CHECK(std::abs(c * std::sqrt(monomial_weight(mi.m, mi.n)) - v.unit_coeffs[q]) <= 1e-15 * std::abs(c));
    return c;
}

}  // namespace

TEST_CASE("alpha coefficients") {
    const TruncationSpec tr = tight();
    SUBCASE("n = 0 gives a geometric sequence") {
        const FrameVector a = alpha(2, 0.5, 0.0, {0, 0}, tr);
        CHECK(raw(a, 0).real() == doctest::Approx(1.0));
        CHECK(raw(a, 1).real() == doctest::Approx(0.5));
        CHECK(raw(a, 2).real() == doctest::Approx(0.25));
        CHECK(a.monomial(2).m == 4);
    }
    SUBCASE("eps = 0 leaves one monomial") {
        const FrameVector a = alpha(4, 0.0, 0.0, {3, 2}, tr);
        CHECK(a.q_max() == 0);
        CHECK(raw(a, 0).real() == doctest::Approx(10.0));
    }
    SUBCASE("phase at t = pi/2") {
        const FrameVector a = alpha(2, 0.5, std::numbers::pi / 2, {1, 1}, tr);
        const Complex c = raw(a, 1);
        CHECK(std::abs(c - Complex(0.0, -2.0)) < 1e-14);
    }
}

TEST_CASE("alpha norms") {
    CHECK(alpha_norm_sq(1, 0.5, 0, 0) == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
    CHECK(alpha_norm_sq(2, 0.5, 1, 1) == doctest::Approx(32.0 / 9.0).epsilon(1e-14));
    CHECK(alpha_norm_sq(4, 0.0, 2, 3) == doctest::Approx(10.0));
    // 40-digit series reference
    CHECK(alpha_norm_sq(3, 0.4, 1, 2) == doctest::Approx(6.681243926141885).epsilon(1e-14));
    CHECK(alpha(3, 0.4, 0.7, {1, 2}, tight()).norm_sq() == doctest::Approx(6.681243926141885).epsilon(1e-13));
}

TEST_CASE("beta and gamma") {
    const TruncationSpec tr = tight();
    const FrameVector b = beta(1, 0.5, 0.0, {0, 0}, tr);
    CHECK(raw(b, 0).real() == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-15));
    CHECK(raw(b, 3).real() == doctest::Approx(std::sqrt(3.0) / 16.0).epsilon(1e-15));
    CHECK(b.norm_sq() == doctest::Approx(1.0).epsilon(1e-14));
    const FrameVector g = gamma(1, 0.5, 0.0, {0, 0}, 1.0 / 3.0, tr);
    for (int q = 0; q <= b.q_max(); ++q) CHECK(g.coeff_q(q) == b.coeff_q(q));
}

TEST_CASE("time derivatives") {
    const TruncationSpec tr = tight();
    const FrameVector d0 = frame_time_derivative(2, 0.3, 0.4, {1, 2}, 0, FrameKind::Alpha, tr);
    const FrameVector a = alpha(2, 0.3, 0.4, {1, 2}, tr);
    for (int q = 0; q <= a.q_max(); ++q) CHECK(std::abs(d0.coeff_q(q) - a.coeff_q(q)) < 1e-15);
    CHECK(frame_time_derivative(2, 0.0, 0.4, {1, 2}, 1, FrameKind::Alpha, tr).norm_sq() == 0.0);
    const FrameVector d1 = frame_time_derivative(1, 0.5, 0.0, {0, 0}, 1, FrameKind::Alpha, tr);
    CHECK(d1.norm_sq() == doctest::Approx(20.0 / 27.0).epsilon(1e-13));
}

TEST_CASE("gram matrix") {
    const TruncationSpec tr = tight();
    const auto grid = chain_grid(3, 3);
    REQUIRE(grid.size() == 12);
    const Eigen::MatrixXcd G = gram(3, 0.4, 1.0, grid, tr);
    for (Eigen::Index i = 0; i < G.rows(); ++i)
        for (Eigen::Index j = 0; j < G.cols(); ++j) {
            if (i == j)
                CHECK(std::abs(G(i, j) - 1.0) < 1e-10);
            else
                CHECK(G(i, j) == Complex(0.0, 0.0));
        }
}

TEST_CASE("membership residual") {
    TruncationSpec tr = tight();
    tr.m_max = 12;
    CHECK(membership_residual_exact(2, Rational(1, 2), {0, 0}, 4, 0, tr) == 0);
    CHECK(membership_residual_exact(3, Rational(2, 5), {1, 2}, 4, 2, tr) == 0);
    CHECK(membership_residual_exact(3, Rational(2, 5), {1, 2}, 7, 1, tr) == 0);
    const MembershipResidual res = membership_residual(3, 0.4, 2.0, {1, 2}, 7, 2, tr);
    CHECK(std::abs(res.value) <= res.bound);
    CHECK(membership_residual(3, 0.4, 2.0, {1, 2}, 7, 3, tr).value == Complex(0.0, 0.0));
}

TEST_CASE("chain coordinates") {
    const TruncationSpec tr = tight();
    SUBCASE("beta maps to an indicator") {
        const ChainTable c = chain_coordinates(to_monomials(beta(2, 0.5, 0.3, {1, 1}, tr)), 2, 0.5, 0.3, tr);
        for (const auto& [idx, v] : c) {
            if (idx == ChainIndex{1, 1})
                CHECK(std::abs(v - 1.0) < 1e-12);
            else
                CHECK(std::abs(v) < 1e-14);
        }
    }
    SUBCASE("the generator is orthogonal to the fiber") {
        const MonomialVector gen{{{2, 0}, 1.0}, {{0, 0}, -0.5}};
        for (const auto& [idx, v] : chain_coordinates(gen, 2, 0.5, 0.0, tr)) CHECK(std::abs(v) < 1e-14);
    }
    SUBCASE("eps = 0 monomial") {
        const MonomialVector z{{{1, 2}, 1.0}};
        const ChainTable c = chain_coordinates(z, 3, 0.0, 0.0, tr);
        // <z^(1,2), z^(1,2)/||z^(1,2)||> = ||z^(1,2)|| = sqrt(1/3)
        CHECK(std::abs(c.at({1, 2}) - std::sqrt(1.0 / 3.0)) < 1e-15);
    }
}
