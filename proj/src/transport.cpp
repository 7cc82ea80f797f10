#include "dasub/transport.hpp"

#include <cmath>

#include <fmt/format.h>

#include "dasub/core_series.hpp"

namespace dasub {

namespace {

double root_F(int k, double epsilon) { return std::pow(epsilon * epsilon, 1.0 / k); }

}  // namespace

double frequency(int k, double epsilon, int r, int n) {
    require_chain(k, {r, n});
    require_epsilon(epsilon);
    if (epsilon == 0.0) return 0.0;
    return closed_moments(k, epsilon * epsilon, r, n).mean;
}

double frequency_series(int k, double epsilon, int r, int n, double rel_tol) {
    require_chain(k, {r, n});
    require_epsilon(epsilon);
    if (epsilon == 0.0) return 0.0;
    const ChainWeights cw = chain_weights(k, epsilon * epsilon, r, n, 1, rel_tol);
    return weight_moments(cw, 1)[1];
}

double frequency_asymptote(int k, double epsilon, int r, int n) {
    require_chain(k, {r, n});
    require(epsilon > 0.0 && epsilon < 1.0, fmt::format("asymptote requires 0 < epsilon < 1 (got {})", epsilon));
    const double F = root_F(k, epsilon);
    return F * n / (k * (1.0 - F)) + F / (k * (1.0 - F)) - static_cast<double>(r) / k;
}

double frequency_gap(int k, double epsilon, int r, int n) {
    require_chain(k, {r, n});
    require(epsilon > 0.0 && epsilon < 1.0, fmt::format("gap requires 0 < epsilon < 1 (got {})", epsilon));
    const RootData rd = RootData::make(k, Complex(epsilon * epsilon, 0.0));
    const Complex a0 = rd.a[0];
    Complex diff(0.0, 0.0);  // R1 - R0 over j >= 1
    Complex R0(0.0, 0.0);
    for (int j = 1; j < k; ++j) {
        const Complex base = rd.zeta_pow(j, -r) * int_pow(a0 / rd.a[j], n + 1);
        R0 += base;
        diff += base * (rd.zeta[j] - 1.0) / rd.a[j];
    }
    const Complex gap = rd.F * static_cast<double>(n + 1) / (static_cast<double>(k) * a0) * diff / (1.0 + R0);
    return gap.real();
}

double FrequencyTable::at(int r, int n) const {
    const auto it = values.find({r, n});
    if (it == values.end()) throw RangeError(fmt::format("frequency table has no entry ({}, {})", r, n));
    return it->second;
}

FrequencyTable frequency_table(int k, double epsilon, int n_max) {
    require_k(k);
    require_epsilon(epsilon);
    require(n_max >= 0, "n_max must be nonnegative");
    FrequencyTable tab{k, epsilon, {}};
    for (const ChainIndex& c : chain_grid(k, n_max)) tab.values[c] = frequency(k, epsilon, c.r, c.n);
    return tab;
}

Complex transport_phase(double f, double t) {
    const double turns = f * t / kTwoPi;
    return std::polar(1.0, kTwoPi * (turns - std::floor(turns)));
}

ChainTable transport_apply(int k, double epsilon, double t, const ChainTable& v) {
    ChainTable out;
    for (const auto& [c, x] : v) out[c] = x * transport_phase(frequency(k, epsilon, c.r, c.n), t);
    return out;
}

TransportDiagonal monodromy_diagonal(int k, double epsilon, int n_max) {
    TransportDiagonal d;
    d.t = kTwoPi;
    for (const auto& [c, f] : frequency_table(k, epsilon, n_max).values) {
        d.phases[c] = std::polar(1.0, kTwoPi * (f - std::floor(f)));
    }
    return d;
}

FrequencyDifferences frequency_differences(int k, double epsilon, int n_max) {
    require_k(k);
    require_epsilon(epsilon);
    require(n_max >= 2, fmt::format("frequency differences need n_max >= 2 (got {})", n_max));
    FrequencyDifferences out;
    out.limit_r = -1.0 / k;
    if (epsilon == 0.0) {
        for (const ChainIndex& c : chain_grid(k, n_max)) {
            out.delta_r[c] = 0.0;
            if (c.n >= 1) out.delta_n[c] = 0.0;
        }
        return out;
    }
    const double F = root_F(k, epsilon);
    const double step_n = F / (k * (1.0 - F));
    out.limit_n = step_n;
    // f = asymptote + gap; the asymptote differences are exact rationals in r
    std::map<ChainIndex, double> gap;
    for (const ChainIndex& c : chain_grid(k, n_max)) gap[c] = frequency_gap(k, epsilon, c.r, c.n);
    for (const ChainIndex& c : chain_grid(k, n_max)) {
        const int prev = c.r == 0 ? k - 1 : c.r - 1;
        const double asym_step = c.r == 0 ? static_cast<double>(k - 1) / k : -1.0 / k;
        out.delta_r[c] = (gap[c] - gap[{prev, c.n}]) + asym_step;
        if (c.n >= 1) out.delta_n[c] = (gap[c] - gap[{c.r, c.n - 1}]) + step_n;
    }
    return out;
}

double distance_mod1(double a, double b) {
    const double d = a - b;
    const double frac = d - std::floor(d);
    return std::min(frac, 1.0 - frac);
}

double flatness_residual(int k, double epsilon, double t, ChainIndex c, const TruncationSpec& trunc, bool use_beta) {
    const double f = frequency(k, epsilon, c.r, c.n);
    const FrameVector d = frame_time_derivative(k, epsilon, t, c, 1, use_beta ? FrameKind::Beta : FrameKind::Gamma,
                                                trunc, f);
    const ChainTable coords = chain_coordinates(to_monomials(d), k, epsilon, t, trunc);
    double s = 0.0;
    for (const auto& [idx, x] : coords) s += std::norm(x);
    return std::sqrt(s);
}

}  // namespace dasub
