#include <doctest.h>

#include <cmath>

#include "dasub/core_series.hpp"

using namespace dasub;

TEST_CASE("binomial weight is the reciprocal binomial") {
    CHECK(binomial_weight(0, 0) == 1.0);
    CHECK(binomial_weight(1, 1) == 0.5);
    CHECK(binomial_weight(2, 3) == 0.1);
    CHECK(binomial_weight_exact(2, 3) == Rational(1, 10));
    CHECK(binomial_exact(60, 30) == BigInt("118264581564861424"));
}

TEST_CASE("closed form matches geometric series") {
    CHECK(closed_sum(1, 0.25, 0, 0, 0).real() == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
    CHECK(closed_sum(2, 0.25, 0, 0, 0).real() == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
    CHECK(std::abs(closed_sum(2, 0.25, 0, 0, 0).imag()) < 1e-15);
}

TEST_CASE("closed first moment against a high-precision oracle") {
    // sum_q C(3+3q, 2) 0.1^q q, 40-digit reference
    const double ref = 2.469135802469135802469;
    CHECK(closed_sum(3, 0.1, 1, 2, 1).real() == doctest::Approx(ref).epsilon(1e-13));
    const SeriesResult s = series_sum(3, 0.1, 1, 2, 1, 1e-16);
    CHECK(s.tail_bound < 1e-15);
    CHECK(std::abs(s.value.real() - closed_sum(3, 0.1, 1, 2, 1).real()) < 1e-12 * ref);
}

TEST_CASE("series sum degenerate and reference cases") {
    CHECK(series_sum(1, 0.0, 5, 3, 0, 1e-15).value.real() == 56.0);
    CHECK(series_sum(1, 0.0, 5, 3, 1, 1e-15).value.real() == 0.0);
    const SeriesResult s = series_sum(2, 0.25, 1, 1, 0, 1e-15);
    CHECK(std::abs(s.value.real() - 32.0 / 9.0) <= s.tail_bound + 1e-14);
    CHECK(closed_sum(2, 0.25, 1, 1, 0).real() == doctest::Approx(32.0 / 9.0).epsilon(1e-14));
}

TEST_CASE("exact series is a certified rational partial sum") {
    const Rational E(1, 4);
    const ExactSeriesResult s = series_sum_exact(2, E, 1, 1, 0, Rational(1, 1000000000000LL));
    const Rational err = Rational(32, 9) - s.value;
    CHECK(err >= 0);
    CHECK(err <= s.tail_bound);
    CHECK(s.tail_bound <= Rational(1, 1000000000000LL));
}

TEST_CASE("closed and series agree on second moments") {
    for (int k = 1; k <= 4; ++k)
        for (int r = 0; r < k; ++r) {
            const double E = 0.37;
            const Complex c = closed_sum(k, E, r, 7, 2);
            const SeriesResult s = series_sum(k, E, r, 7, 2, 1e-15);
            CHECK(std::abs(c - s.value) <= s.tail_bound + 1e-12 * std::abs(c));
        }
}

TEST_CASE("roots-of-unity filter is a residue indicator") {
    for (int k = 1; k <= 6; ++k)
        for (int s = -7; s <= 13; ++s) {
            const double expect = (((s % k) + k) % k == 0) ? 1.0 : 0.0;
            CHECK(std::abs(roots_of_unity_filter(k, s) - Complex(expect, 0.0)) < 1e-13);
        }
}

TEST_CASE("asymptotic ratio") {
    SUBCASE("k = 1 is exactly constant") {
        for (double v : asymptotic_ratio(1, 0.25, 0, 0, 10, 50)) CHECK(v == doctest::Approx(4.0 / 3.0).epsilon(1e-13));
    }
    SUBCASE("k = 2 approaches the dominant root term") {
        const auto v = asymptotic_ratio(2, 0.25, 0, 0, 50, 200);
        CHECK(std::abs(v.back() - 1.0) < 1e-12);
    }
}

TEST_CASE("rational conversion round-trips") {
    CHECK(to_double(to_rational(0.1)) == 0.1);
    CHECK(parse_rational("3/8") == Rational(3, 8));
    CHECK(parse_rational("0.125") == Rational(1, 8));
    CHECK_THROWS_AS(parse_rational("abc"), ParameterError);
}

TEST_CASE("invalid parameters are rejected") {
    CHECK_THROWS(closed_sum(0, 0.25, 0, 0, 0));
    CHECK_THROWS(closed_sum(2, 0.25, 2, 0, 0));
    CHECK_THROWS(closed_sum(2, 1.0, 0, 0, 0));
}
