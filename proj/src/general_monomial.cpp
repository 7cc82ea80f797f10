#include "dasub/general_monomial.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace dasub {

namespace {

constexpr double kRadiusMargin = 0.99;
constexpr int kMaxTerms = 10'000'000;

void check_kl(int k, int l, bool allow_l_zero) {
    require(k >= 1, fmt::format("k must be a positive integer (got {})", k));
    require(allow_l_zero ? l >= 0 : l >= 1, fmt::format("l must be a positive integer (got {})", l));
}

}  // namespace

double gm_radius_sq(int k, int l) {
    check_kl(k, l, true);
    const double kk = k, ll = l;
    const double log_r = kk * std::log(kk) + (l > 0 ? ll * std::log(ll) : 0.0) - (kk + ll) * std::log(kk + ll);
    return std::exp(log_r);
}

std::vector<MonomialIndex> gm_chain_starts(int k, int l, int m_max, int n_max) {
    check_kl(k, l, false);
    require(m_max >= 0 && n_max >= 0, "window bounds must be nonnegative");
    std::vector<MonomialIndex> out;
    for (int m = 0; m <= m_max; ++m)
        for (int n = 0; n <= n_max; ++n)
            if (m < k || n < l) out.push_back({m, n});
    return out;
}

MonomialIndex gm_chain_of(int k, int l, MonomialIndex mi) {
    check_kl(k, l, true);
    require(mi.m >= 0 && mi.n >= 0, "monomial exponents must be nonnegative");
    const int q = l == 0 ? mi.m / k : std::min(mi.m / k, mi.n / l);
    return {mi.m - k * q, mi.n - l * q};
}

double gm_frequency(int k, int l, double epsilon, MonomialIndex start, double rel_tol) {
    check_kl(k, l, true);
    require(epsilon >= 0.0 && std::isfinite(epsilon), fmt::format("epsilon must be nonnegative (got {})", epsilon));
    require(start.m >= 0 && start.n >= 0 && (start.m < k || (l > 0 && start.n < l)),
            fmt::format("({}, {}) is not a chain start for (k, l) = ({}, {})", start.m, start.n, k, l));
    require(rel_tol > 0.0, "tolerance must be positive");
    const double R = gm_radius_sq(k, l);
    const double E = epsilon * epsilon;
    if (E >= kRadiusMargin * R)
        throw DivergenceError(fmt::format(
            "weight series for (k, l) = ({}, {}) needs eps^2 < 0.99 * k^k l^l / (k+l)^(k+l) = {:.17g} (got eps^2 = {:.17g})",
            k, l, kRadiusMargin * R, E));
    if (E == 0.0) return 0.0;

    const int kl = k + l;
    const double N = start.m + start.n;
    const double rho_inf = E / R;
    auto step = [&](int q) {
        // t_{q+1} / t_q
        double num = 1.0, den = 1.0;
        const double base = N + static_cast<double>(kl) * q;
        for (int i = 1; i <= kl; ++i) num *= base + i;
        for (int i = 1; i <= k; ++i) den *= start.m + static_cast<double>(k) * q + i;
        for (int i = 1; i <= l; ++i) den *= start.n + static_cast<double>(l) * q + i;
        return E * num / den;
    };
    auto majorant = [&](int q) {
        // nonincreasing bound on every ratio from q onward
        const double qq = q + 1.0;
        double b = rho_inf * std::pow(1.0 + N / (kl * qq), kl);
        b *= std::pow(std::max(1.0, k * qq / (start.m + static_cast<double>(k) * q + 1.0)), k);
        if (l > 0) b *= std::pow(std::max(1.0, l * qq / (start.n + static_cast<double>(l) * q + 1.0)), l);
        return b;
    };

    double t = 1.0, s0 = 0.0, s1 = 0.0;
    for (int q = 0; q < kMaxTerms; ++q) {
        s0 += t;
        s1 += t * q;
        if (q >= 1) {
            const double b = majorant(q);
            const double b1 = b * (q + 1.0) / q;
            if (b1 < 1.0) {
                const double tail0 = t * b / (1.0 - b);
                const double tail1 = t * q * b1 / (1.0 - b1);
                if (tail0 <= rel_tol * s0 && tail1 <= rel_tol * s1) return s1 / s0;
            }
        }
        t *= step(q);
        if (t > 1e200) {
            t *= 1e-200;
            s0 *= 1e-200;
            s1 *= 1e-200;
        }
    }
    throw RangeError("general monomial weight series did not converge within the term budget");
}

double z1z2_frequency_closed(double epsilon, int d) {
    require(epsilon >= 0.0 && epsilon < 0.5, fmt::format("closed form needs 0 <= eps < 1/2 (got {})", epsilon));
    const double x = epsilon * epsilon;
    const double s = std::sqrt(1.0 - 4.0 * x);
    // 1 - s written as 4x / (1 + s)
    const double one_minus_s = 4.0 * x / (1.0 + s);
    return std::abs(d) * one_minus_s / (2.0 * s) + 2.0 * x / (s * s);
}

MonomialIndex z1z2_start(int d) { return d >= 0 ? MonomialIndex{d, 0} : MonomialIndex{0, -d}; }

std::string to_string(PhaseMatch m) {
    switch (m) {
        case PhaseMatch::Derived:
            return "derived";
        case PhaseMatch::Reported:
            return "reported";
        case PhaseMatch::Neither:
            return "neither";
        case PhaseMatch::NotApplicable:
            return "not_applicable";
    }
    return "?";
}

PhaseReport phase_report(int k, int l, double epsilon, int d_max) {
    check_kl(k, l, false);
    require(d_max >= 1, "d_max must be at least 1");
    PhaseReport rep;
    rep.k = k;
    rep.l = l;
    rep.epsilon = epsilon;
    std::vector<double> fm, fn;
    for (int j = 0; j <= d_max; ++j) {
        fm.push_back(gm_frequency(k, l, epsilon, {j, 0}));
        fn.push_back(gm_frequency(k, l, epsilon, {0, j}));
    }
    for (int j = 0; j < d_max; ++j) {
        rep.m_direction.push_back(fm[j + 1] - fm[j]);
        rep.n_direction.push_back(fn[j + 1] - fn[j]);
    }
    rep.lowest_mode = fm[0];
    if (k == 1 && l == 1) {
        const double x = epsilon * epsilon;
        const double s = std::sqrt(1.0 - 4.0 * x);
        const double one_minus_s = 4.0 * x / (1.0 + s);
        rep.paper_exponent = one_minus_s / s;
        rep.derived_exponent = one_minus_s / (2.0 * s);
        rep.small_eps_exponent = 2.0 * x;
        const double observed = rep.m_direction.back();
        const double tol = 1e-8;
        if (std::abs(observed - rep.derived_exponent) < tol)
            rep.match = PhaseMatch::Derived;
        else if (std::abs(observed - rep.paper_exponent) < tol)
            rep.match = PhaseMatch::Reported;
        else
            rep.match = PhaseMatch::Neither;
        rep.factor_two = std::abs(rep.paper_exponent - 2.0 * rep.derived_exponent) <= 1e-14 * rep.paper_exponent;
    }
    return rep;
}

}  // namespace dasub
