#include <doctest.h>

#include <cmath>

#include "dasub/general_monomial.hpp"
#include "dasub/transport.hpp"

using namespace dasub;

TEST_CASE("chain starts") {
    const auto s11 = gm_chain_starts(1, 1, 3, 3);
    CHECK(s11.size() == 7);
    for (const auto& s : s11) CHECK((s.m == 0 || s.n == 0));
    for (const auto& s : gm_chain_starts(2, 1, 5, 5)) CHECK((s.m < 2 || s.n < 1));
    const MonomialIndex c = gm_chain_of(1, 1, {5, 3});
    CHECK(c.m == 2);
    CHECK(c.n == 0);
    CHECK(z1z2_start(2) == MonomialIndex{2, 0});
    CHECK(z1z2_start(-3) == MonomialIndex{0, 3});
}

TEST_CASE("(1,1) frequencies") {
    CHECK(gm_frequency(1, 1, 0.0, {0, 0}) == 0.0);
    CHECK(gm_frequency(1, 1, 0.3, {0, 0}) == doctest::Approx(0.28125).epsilon(1e-13));
    CHECK(gm_frequency(1, 1, 0.3, {1, 0}) == doctest::Approx(0.40625).epsilon(1e-13));
    CHECK(z1z2_frequency_closed(0.3, 0) == doctest::Approx(0.28125).epsilon(1e-15));
    CHECK(z1z2_frequency_closed(0.3, 1) == doctest::Approx(0.40625).epsilon(1e-15));
    for (int d = 0; d < 10; ++d) {
        CHECK(z1z2_frequency_closed(0.3, d + 1) - z1z2_frequency_closed(0.3, d) == doctest::Approx(0.125).epsilon(1e-13));
        CHECK(z1z2_frequency_closed(0.3, -d) == z1z2_frequency_closed(0.3, d));
        CHECK(gm_frequency(1, 1, 0.37, z1z2_start(d)) == doctest::Approx(z1z2_frequency_closed(0.37, d)).epsilon(1e-12));
    }
}

TEST_CASE("(2,1) frequencies against a series reference") {
    CHECK(gm_frequency(2, 1, 0.2, {0, 0}) == doctest::Approx(0.1662634620084897).epsilon(1e-13));
    CHECK(gm_frequency(2, 1, 0.2, {1, 0}) == doctest::Approx(0.2166142186271720).epsilon(1e-13));
}

TEST_CASE("l = 0 reproduces the single-variable frequencies") {
    for (int k = 1; k <= 4; ++k)
        for (int r = 0; r < k; ++r)
            for (int n : {0, 3, 9}) CHECK(gm_frequency(k, 0, 0.45, {r, n}) == doctest::Approx(frequency(k, 0.45, r, n)).epsilon(1e-12));
}

TEST_CASE("divergent parameters are rejected") {
    CHECK_THROWS_AS(gm_frequency(1, 1, 0.5, {0, 0}), DivergenceError);
    CHECK_THROWS_AS(gm_frequency(1, 1, 0.3, {1, 1}), ParameterError);
}

TEST_CASE("phase report") {
    const PhaseReport r = phase_report(1, 1, 0.3, 10);
    for (double d : r.m_direction) CHECK(d == doctest::Approx(0.125).epsilon(1e-12));
    for (double d : r.n_direction) CHECK(d == doctest::Approx(0.125).epsilon(1e-12));
    CHECK(r.paper_exponent == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(r.derived_exponent == doctest::Approx(0.125).epsilon(1e-14));
    CHECK(r.factor_two);
    CHECK(r.match == PhaseMatch::Derived);
    const PhaseReport small = phase_report(1, 1, 1e-3, 2);
    CHECK(small.paper_exponent == doctest::Approx(2e-6).epsilon(1e-5));
    const PhaseReport other = phase_report(2, 1, 0.2, 5);
    CHECK(other.match == PhaseMatch::NotApplicable);
    CHECK(other.m_direction.size() == 5);
}
