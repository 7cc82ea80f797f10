#include <doctest.h>

#include <cmath>

#include "dasub/frames.hpp"
#include "dasub/sobolev.hpp"

using namespace dasub;

namespace {

double lgamma_weight(double s, int m, int n) {
    return std::exp(std::lgamma(m + 1.0) + std::lgamma(n + 1.0) + std::lgamma(s + 3.0) - std::lgamma(m + n + s + 3.0));
}

TruncationSpec window(int n_max) {
    TruncationSpec t;
    t.tail_tol = 1e-15;
    t.n_max = n_max;
    return t;
}

}  // namespace

TEST_CASE("besov weights") {
    CHECK(besov_weight(-2.0, 1, 1) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(besov_weight(4.0, 0, 0) == 1.0);
    CHECK(besov_weight(-1.0, 2, 1) == doctest::Approx(1.0 / 12.0).epsilon(1e-15));
    CHECK(besov_weight_exact(-1, 2, 1) == Rational(1, 12));
    CHECK(besov_weight_exact(4, 1, 0) == Rational(1, 7));
    // 40-digit Gamma references
    CHECK(besov_weight(0.5, 3, 2) == doctest::Approx(0.002841602841602842).epsilon(1e-14));
    CHECK(besov_weight(-2.5, 4, 1) == doctest::Approx(0.8126984126984127).epsilon(1e-14));
    for (double s : {-2.7, -1.3, 0.0, 2.5, 4.0, 9.1})
        for (int m : {0, 3, 17})
            for (int n : {0, 5, 40}) CHECK(besov_weight(s, m, n) == doctest::Approx(lgamma_weight(s, m, n)).epsilon(1e-11));
    CHECK_THROWS(besov_weight(-3.0, 1, 1));
}

TEST_CASE("Hardy-space branch agrees with the binomial weight exactly") {
    for (int m = 0; m < 12; ++m)
        for (int n = 0; n < 12; ++n) CHECK(besov_weight_exact(-2, m, n) == binomial_weight_exact(m, n));
}

TEST_CASE("smoothing factor") {
    CHECK(smoothing_factor(6.0, 0) == 1.0);
    CHECK(smoothing_factor(6.0, 1) == doctest::Approx(1.0 / 7.0).epsilon(1e-15));
    double lo = 1e300, hi = 0.0;
    for (int n = 1; n <= 10000; ++n) {
        const double v = smoothing_factor(6.0, n) * std::pow(n, 6);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    CHECK(lo > 0.1);
    CHECK(hi < 720.0 + 1e-9);
}

TEST_CASE("projection matrix degenerate cases") {
    SUBCASE("eps = 0 keeps only the m < k identity block") {
        const MixedProjectionMatrix P = projection_matrix(2, 0.0, 0.0, -2.0, 0, window(3));
        for (const auto& [key, v] : P.entries) {
            CHECK(key.second.m < 2);
            CHECK(key.first == key.second);
            CHECK(std::abs(v - 1.0) < 1e-15);
        }
    }
    SUBCASE("eps = 0 first derivative vanishes") {
        const MixedProjectionMatrix P = projection_matrix(2, 0.0, 0.0, 4.0, 1, window(3));
        for (const auto& [key, v] : P.entries) CHECK(v == Complex(0.0, 0.0));
        CHECK(hs_norm(P, 3).norm == 0.0);
    }
}

TEST_CASE("projection is idempotent on the fiber") {
    const TruncationSpec tr = window(4);
    const MixedProjectionMatrix P = projection_matrix(2, 0.5, 0.4, -2.0, 0, tr);
    const FrameVector b = beta(2, 0.5, 0.4, {1, 2}, tr);
    std::map<MonomialIndex, Complex> x;
    for (int q = 0; q <= b.q_max(); ++q) x[b.monomial(q)] = b.unit_coeffs[q];
    const auto y = dasub::apply(P, x);
    double err = 0.0;
    for (const auto& [mi, v] : x) {
        const auto it = y.find(mi);
        err = std::max(err, std::abs(v - (it == y.end() ? Complex() : it->second)));
    }
    for (const auto& [mi, v] : y)
        if (!x.count(mi)) err = std::max(err, std::abs(v));
    CHECK(err < 1e-10);
}

TEST_CASE("HS ladder by entries and by moments agree") {
    const MixedProjectionMatrix P = projection_matrix(2, 0.5, 0.0, 4.0, 1, window(8));
    const HsResult direct = hs_norm(P, 8);
    const auto ladder = hs_ladder(2, 0.5, 4.0, 1, 8);
    REQUIRE(direct.ladder.size() == ladder.size());
    for (std::size_t i = 0; i < ladder.size(); ++i)
        CHECK(direct.ladder[i].increment == doctest::Approx(ladder[i].increment).epsilon(1e-9));
    CHECK(direct.norm * direct.norm == doctest::Approx(ladder.back().partial_sum).epsilon(1e-9));
    CHECK(hs_norm(MixedProjectionMatrix{}, 5).norm == 0.0);
}

TEST_CASE("HS ladder convergence contrast") {
    const auto smooth = hs_ladder(2, 0.5, 4.0, 1, 400);
    CHECK(ladder_tail(smooth, 300).total() < 1e-4);
    const auto rough = hs_ladder(2, 0.5, -2.0, 1, 400);
    CHECK_FALSE(ladder_tail(rough, 300).increments_vanish);
}

TEST_CASE("nonsmooth ratio") {
    CHECK(nonsmooth_ratio(1, 0.5, 0, 0) == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
    CHECK(nonsmooth_ratio(3, 0.0, 1, 4) == 0.0);
    // 40-digit moment reference
    CHECK(nonsmooth_ratio(2, 0.5, 0, 10) == doctest::Approx(2.345265246511762).epsilon(1e-10));
    CHECK(nonsmooth_ratio_central(2, 0.5, 0, 10) == doctest::Approx(2.345265246511762).epsilon(1e-12));
}

TEST_CASE("log-log fit recovers a power law") {
    std::vector<double> x, y;
    for (int n = 10; n <= 100; n += 10) {
        x.push_back(n);
        y.push_back(3.0 * std::pow(n, 0.5));
    }
    const LogLogFit fit = fit_loglog(x, y);
    CHECK(fit.slope == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::exp(fit.intercept) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("Taylor remainder") {
    const TruncationSpec tr = window(20);
    CHECK(taylor_remainder_check(2, 0.0, 0.3, 1e-2, 4.0, 1, tr) == 0.0);
    const double r1 = taylor_remainder_check(2, 0.5, 0.3, 1e-2, 4.0, 1, tr);
    const double r2 = taylor_remainder_check(2, 0.5, 0.3, 1e-3, 4.0, 1, tr);
    CHECK(r1 / r2 == doctest::Approx(100.0).epsilon(0.02));
}
