#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dasub/transport.hpp"

using namespace dasub;

TEST_CASE("frequencies") {
    CHECK(frequency(1, 0.5, 0, 0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(frequency(3, 0.0, 2, 7) == 0.0);
    CHECK(std::abs(frequency(2, 0.5, 1, 40) - 20.0) < 1e-8);
    // 40-digit series references
    CHECK(frequency(3, 0.4, 1, 2) == doctest::Approx(0.8138528138528139).epsilon(1e-13));
    CHECK(frequency(2, 0.7, 0, 5) == doctest::Approx(6.999751286134103).epsilon(1e-13));
    CHECK(frequency_series(3, 0.4, 1, 2) == doctest::Approx(0.8138528138528139).epsilon(1e-13));
}

TEST_CASE("asymptote") {
    CHECK(frequency_asymptote(2, 0.5, 0, 0) == doctest::Approx(0.5));
    CHECK(frequency_asymptote(2, 0.5, 1, 10) == doctest::Approx(5.0));
    CHECK(frequency_asymptote(1, 0.5, 0, 0) == doctest::Approx(frequency(1, 0.5, 0, 0)).epsilon(1e-15));
    for (int n : {0, 5, 30})
        CHECK(std::abs(frequency(2, 0.5, 1, n) - frequency_asymptote(2, 0.5, 1, n) - frequency_gap(2, 0.5, 1, n)) <
              1e-12);
}

TEST_CASE("transport is unitary and starts at the identity") {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> g;
    ChainTable v;
    for (const ChainIndex& c : chain_grid(3, 6)) v[c] = Complex(g(rng), g(rng));
    CHECK(transport_apply(3, 0.4, 0.0, v) == v);
    double before = 0.0, after = 0.0;
    for (const auto& [c, x] : v) before += std::norm(x);
    for (const auto& [c, x] : transport_apply(3, 0.4, 1.7, v)) after += std::norm(x);
    CHECK(std::abs(after - before) < 1e-12 * before);
}

TEST_CASE("monodromy") {
    const Complex expect = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    const ChainTable e00{{{0, 0}, 1.0}};
    CHECK(std::abs(transport_apply(1, 0.5, 2.0 * std::numbers::pi, e00).at({0, 0}) - expect) < 1e-14);
    const TransportDiagonal d = monodromy_diagonal(1, 0.5, 4);
    CHECK(std::abs(d.phases.at({0, 0}) - expect) < 1e-14);
    for (const auto& [c, p] : monodromy_diagonal(3, 0.6, 10).phases) CHECK(std::abs(std::abs(p) - 1.0) < 1e-15);
    for (const auto& [c, p] : monodromy_diagonal(2, 0.0, 10).phases) CHECK(p == Complex(1.0, 0.0));
}

TEST_CASE("frequency differences") {
    const FrequencyDifferences d = frequency_differences(2, 0.5, 60);
    CHECK(d.limit_r == doctest::Approx(-0.5));
    CHECK(d.limit_n == doctest::Approx(0.5));
    CHECK(std::abs(d.delta_n.at({1, 60}) - 0.5) < 1e-12);
    CHECK(std::abs(d.delta_r.at({1, 60}) + 0.5) < 1e-12);
    // the r = 0 difference wraps to r = k - 1 and picks up a whole step
    CHECK(distance_mod1(d.delta_r.at({0, 60}), -0.5) < 1e-12);

    const FrequencyDifferences d1 = frequency_differences(1, 0.5, 20);
    for (int n = 1; n <= 20; ++n) CHECK(d1.delta_n.at({0, n}) == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
    CHECK(d1.delta_r.at({0, 7}) == 0.0);
}

TEST_CASE("parallel transport is flat for gamma and not for beta") {
    TruncationSpec tr;
    tr.tail_tol = 1e-15;
    CHECK(flatness_residual(1, 0.5, 0.0, {0, 0}, tr) <= 1e-10);
    CHECK(flatness_residual(2, 0.5, 0.9, {1, 3}, tr) <= 1e-10);
    CHECK(flatness_residual(2, 0.0, 0.9, {1, 3}, tr) == 0.0);
    CHECK(flatness_residual(1, 0.5, 0.0, {0, 0}, tr, true) == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("distance mod 1") {
    CHECK(distance_mod1(0.25, 1.25) < 1e-15);
    CHECK(distance_mod1(0.9, 0.1) == doctest::Approx(0.2));
}
