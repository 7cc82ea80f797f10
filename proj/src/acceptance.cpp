#include "dasub/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>

#include <fmt/format.h>

#include "dasub/core_series.hpp"
#include "dasub/frames.hpp"
#include "dasub/general_monomial.hpp"
#include "dasub/sobolev.hpp"
#include "dasub/toeplitz.hpp"
#include "dasub/transport.hpp"

namespace dasub {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

double rel_err(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

CriterionResult make(int id, std::string name, bool pass, std::string detail) {
    return CriterionResult{id, std::move(name), pass, std::move(detail), 0.0};
}

CriterionResult closed_vs_oracle() {
    const auto start = Clock::now();
    std::mt19937_64 rng(20240101);
    std::uniform_int_distribution<int> pick_k(1, 5), pick_n(0, 50), pick_l(0, 2);
    std::uniform_real_distribution<double> pick_E(0.0, 0.8);
    double worst = 0.0;
    for (int draw = 0; draw < 100; ++draw) {
        const int k = pick_k(rng);
        const int r = std::uniform_int_distribution<int>(0, k - 1)(rng);
        const int n = pick_n(rng);
        const int l = pick_l(rng);
        double E = pick_E(rng);
        if (E == 0.0) E = 0.5;
        const double closed = closed_sum(k, {E, 0.0}, r, n, l).real();
        const double series = series_sum(k, {E, 0.0}, r, n, l, 1e-15).value.real();
        worst = std::max(worst, rel_err(closed, series));
    }
    const double elapsed = seconds_since(start);
    const bool fast = elapsed < 5.0;
    return make(1, "closed form vs series oracle", worst <= 1e-10 && fast,
                fmt::format("max rel err {:.3e} (<= 1e-10), runtime {}", worst, fast ? "< 5 s" : ">= 5 s"));
}

CriterionResult asymptotics() {
    double worst = 0.0;
    std::string where;
    bool pass = true;
    for (int r : {0, 1}) {
        for (int l : {0, 1, 2}) {
            const std::vector<double> ratio = asymptotic_ratio(2, 0.25, r, l, 50, 200);
            double inc = 0.0;
            for (int n = 100; n < 200; ++n) inc = std::max(inc, std::abs(ratio[n + 1 - 50] - ratio[n - 50]));
            if (inc >= 1e-6) {
                pass = false;
                where += fmt::format(" (r={},l={}):{:.2e}", r, l, inc);
            }
            worst = std::max(worst, inc);
        }
    }
    return make(2, "asymptotic ratios settle", pass,
                fmt::format("max increment past n=100 {:.3e} (< 1e-6){}", worst,
                            where.empty() ? "" : "; failing" + where));
}

CriterionResult frame_orthonormality() {
    const auto start = Clock::now();
    TruncationSpec trunc;
    const Eigen::MatrixXcd G = gram(3, 0.4, 1.0, chain_grid(3, 40), trunc);
    const double dev = (G - Eigen::MatrixXcd::Identity(G.rows(), G.cols())).cwiseAbs().maxCoeff();
    const bool fast = seconds_since(start) < 5.0;
    return make(3, "beta frame is orthonormal", dev < 1e-10 && fast,
                fmt::format("max |G - I| {:.3e} (< 1e-10) over {} chains, runtime {}", dev, G.rows(),
                            fast ? "< 5 s" : ">= 5 s"));
}

CriterionResult submodule_membership() {
    const int k = 2;
    const Rational eps(1, 2);
    TruncationSpec trunc;
    trunc.backend = Backend::Exact;
    trunc.q_max = (30 + k) / k + 1;
    long long checked = 0, nonzero = 0;
    for (const ChainIndex& c : chain_grid(k, 20)) {
        for (int M = 0; M <= 30; ++M) {
            for (int N = 0; N <= 20; ++N) {
                ++checked;
                if (membership_residual_exact(k, eps, c, M, N, trunc) != 0) ++nonzero;
            }
        }
    }
    return make(4, "frame is orthogonal to the submodule (exact)", nonzero == 0,
                fmt::format("{} of {} exact pairings nonzero", nonzero, checked));
}

CriterionResult frequency_consistency() {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> pick_k(1, 5), pick_n(0, 50);
    std::uniform_real_distribution<double> pick_eps(0.1, 0.9);
    double worst = 0.0;
    for (int draw = 0; draw < 100; ++draw) {
        const int k = pick_k(rng);
        const int r = std::uniform_int_distribution<int>(0, k - 1)(rng);
        const int n = pick_n(rng);
        const double eps = pick_eps(rng);
        const double closed = frequency(k, eps, r, n);
        const double series = frequency_series(k, eps, r, n);
        worst = std::max(worst, rel_err(closed, series));
    }
    double worst_k1 = 0.0;
    for (double eps : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        const double F = eps * eps;
        for (int n = 0; n <= 50; ++n) worst_k1 = std::max(worst_k1, rel_err(frequency(1, eps, 0, n), F * (n + 1) / (1 - F)));
    }
    return make(5, "frequency closed form vs series ratio", worst <= 1e-10 && worst_k1 <= 1e-12,
                fmt::format("max rel err {:.3e} (<= 1e-10); k=1 exact form {:.3e} (<= 1e-12)", worst, worst_k1));
}

CriterionResult asymptote_gap() {
    double worst = 0.0;
    for (int r : {0, 1})
        for (int n = 40; n <= 400; ++n)
            worst = std::max(worst, std::abs(frequency(2, 0.5, r, n) - frequency_asymptote(2, 0.5, r, n)));
    return make(6, "frequency approaches its linear asymptote", worst < 1e-8,
                fmt::format("max |f - asymptote| over 40 <= n <= 400: {:.3e} (< 1e-8)", worst));
}

CriterionResult difference_limits() {
    const FrequencyDifferences d = frequency_differences(2, 0.5, 200);
    double worst_r = 0.0, worst_n = 0.0;
    for (int r : {0, 1}) {
        worst_r = std::max(worst_r, distance_mod1(d.delta_r.at({r, 200}), -0.5));
        worst_n = std::max(worst_n, std::abs(d.delta_n.at({r, 200}) - 0.5));
    }
    return make(7, "frequency differences reach their limits", worst_r < 1e-8 && worst_n < 1e-8,
                fmt::format("|dr + 1/2| mod 1 {:.3e}, |dn - 1/2| {:.3e} (< 1e-8)", worst_r, worst_n));
}

CriterionResult unitarity_and_flatness() {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> gauss;
    std::uniform_real_distribution<double> pick_t(-10.0, 10.0);
    double worst_iso = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        ChainTable v;
        for (const ChainIndex& c : chain_grid(2, 20)) v[c] = {gauss(rng), gauss(rng)};
        const ChainTable w = transport_apply(2, 0.5, pick_t(rng), v);
        double nv = 0.0, nw = 0.0;
        for (const auto& [c, x] : v) nv += std::norm(x);
        for (const auto& [c, x] : w) nw += std::norm(x);
        worst_iso = std::max(worst_iso, std::abs(std::sqrt(nw) - std::sqrt(nv)) / std::sqrt(nv));
    }
    double worst_flat = 0.0;
    TruncationSpec trunc;
    for (double t : {0.0, 1.0, kPi})
        for (const ChainIndex& c : chain_grid(2, 20))
            worst_flat = std::max(worst_flat, flatness_residual(2, 0.5, t, c, trunc));
    return make(8, "transport is unitary and gamma is flat", worst_iso <= 1e-12 && worst_flat < 1e-9,
                fmt::format("norm drift {:.3e} (<= 1e-12), flatness {:.3e} (< 1e-9)", worst_iso, worst_flat));
}

bool interior(int k, ShiftOp op, ChainIndex col) {
    switch (op) {
        case ShiftOp::T1:
            return col.r < k - 1;
        case ShiftOp::T1Adj:
            return col.r > 0;
        case ShiftOp::T2:
            return true;
        case ShiftOp::T2Adj:
            return col.n >= 1;
    }
    return false;
}

CriterionResult weighted_shifts() {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> pick_k(1, 4), pick_n(0, 40);
    std::uniform_real_distribution<double> pick_eps(0.05, 0.7);
    double worst = 0.0;
    int compared = 0;
    for (int draw = 0; draw < 50; ++draw) {
        const int k = pick_k(rng);
        const int r = std::uniform_int_distribution<int>(0, k - 1)(rng);
        const int n = pick_n(rng);
        const double eps = pick_eps(rng);
        TruncationSpec trunc;
        trunc.n_max = n + 1;
        for (ShiftOp op : {ShiftOp::T1, ShiftOp::T1Adj, ShiftOp::T2, ShiftOp::T2Adj}) {
            const ChainIndex col{r, n};
            if (!interior(k, op, col)) continue;
            const ChainOperatorMatrix M = toeplitz_matrix(k, eps, 0.0, op, trunc);
            const Complex entry = M.at(shift_target(k, op, col), col);
            const Complex closed = shift_weight(k, eps, op, r, n);
            worst = std::max(worst, std::abs(entry - closed));
            ++compared;
        }
    }
    double worst_k1 = 0.0;
    for (double eps : {0.3, 0.5, 0.7}) {
        TruncationSpec trunc;
        trunc.n_max = 101;
        const ChainOperatorMatrix M = toeplitz_matrix(1, eps, 0.0, ShiftOp::T2, trunc);
        const double expect = std::sqrt(1.0 - eps * eps);
        for (int n = 0; n <= 100; ++n) {
            worst_k1 = std::max(worst_k1, std::abs(shift_weight(1, eps, ShiftOp::T2, 0, n) - expect));
            worst_k1 = std::max(worst_k1, std::abs(M.at({0, n + 1}, {0, n}) - expect));
        }
    }
    return make(9, "weighted-shift closed forms match inner products", worst <= 1e-10 && worst_k1 <= 1e-12,
                fmt::format("max |closed - entry| {:.3e} over {} entries (<= 1e-10); k=1 T2 {:.3e} (<= 1e-12)", worst,
                            compared, worst_k1));
}

CriterionResult conjugation_identities() {
    TruncationSpec trunc;
    trunc.n_max = 60;
    double worst = 0.0;
    for (ShiftOp op : {ShiftOp::T1, ShiftOp::T1Adj, ShiftOp::T2, ShiftOp::T2Adj})
        worst = std::max(worst, conjugation_residual(2, 0.5, op, trunc).max_interior);
    return make(10, "monodromy conjugates shifts by phases", worst < 1e-10,
                fmt::format("max interior residual {:.3e} (< 1e-10)", worst));
}

CriterionResult compactness_decay() {
    bool pass = true;
    std::string detail;
    for (ShiftOp op : {ShiftOp::T1, ShiftOp::T1Adj, ShiftOp::T2, ShiftOp::T2Adj}) {
        const std::vector<double> d = compactness_profile(2, 0.5, op, 200);
        bool decreasing = true;
        for (int n = 20; n < 200; ++n) decreasing = decreasing && d[n + 1] < d[n];
        const bool small = d[200] < 1e-6;
        pass = pass && decreasing && small;
        detail += fmt::format("{}{}: d(200)={:.2e}{}", detail.empty() ? "" : "; ", to_string(op), d[200],
                              decreasing ? "" : " not decreasing");
    }
    return make(11, "conjugation defects decay", pass, detail + " (< 1e-6)");
}

CriterionResult nonsmooth_exponent() {
    std::vector<double> ns, ratios;
    double worst = 0.0;
    for (int n = 100; n <= 1000; ++n) {
        const double a = nonsmooth_ratio(2, 0.5, 0, n);
        const double b = nonsmooth_ratio_central(2, 0.5, 0, n);
        worst = std::max(worst, rel_err(a, b));
        ns.push_back(n);
        ratios.push_back(a);
    }
    const LogLogFit fit = fit_loglog(ns, ratios);
    const bool pass = fit.slope >= 0.48 && fit.slope <= 0.52 && worst <= 1e-10;
    return make(12, "derivative ratio grows like sqrt(n)", pass,
                fmt::format("slope {:.4f} in [0.48, 0.52] (95% CI [{:.6f}, {:.6f}]); path mismatch {:.3e} (<= 1e-10)",
                            fit.slope, fit.ci_low, fit.ci_high, worst));
}

CriterionResult hs_convergence() {
    const int n_top = 600;
    const LadderTail smooth = ladder_tail(hs_ladder(2, 0.5, 4.0, 1, n_top), 300);
    const LadderTail rough = ladder_tail(hs_ladder(2, 0.5, -2.0, 1, n_top), 300);
    const double s_b = 2 * 2 + 1 + 0.5;
    const LadderTail b1 = ladder_tail(hs_ladder(2, 0.5, s_b, 1, n_top), 300);
    const LadderTail b2 = ladder_tail(hs_ladder(2, 0.5, s_b, 2, n_top), 300);
    const bool pass = smooth.total() < 1e-4 && !rough.increments_vanish && b1.total() < 1e-4 && b2.total() < 1e-4;
    return make(13, "smoothed derivative is Hilbert-Schmidt", pass,
                fmt::format("s=4,j=1 tail {:.3e}; s=-2,j=1 increments {} (p={:.2f}); s=5.5 tails j=1 {:.3e}, j=2 "
                            "{:.3e} (< 1e-4)",
                            smooth.total(), rough.increments_vanish ? "vanish" : "do not vanish",
                            rough.decay_exponent, b1.total(), b2.total()));
}

CriterionResult taylor_order() {
    TruncationSpec trunc;
    trunc.n_max = 200;
    std::vector<double> hs{1e-1, 1e-2, 1e-3}, rem;
    for (double h : hs) rem.push_back(taylor_remainder_check(2, 0.5, 0.3, h, 4.0, 1, trunc));
    const LogLogFit fit = fit_loglog(hs, rem);
    return make(14, "Taylor remainder is second order", fit.slope >= 1.9,
                fmt::format("order {:.4f} (>= 1.9); remainders {:.3e}, {:.3e}, {:.3e}", fit.slope, rem[0], rem[1],
                            rem[2]));
}

CriterionResult z1z2_chains() {
    // brute-force check of sum_q C(d + 2q, q) x^q = B^d / sqrt(1 - 4x)
    double worst_gf = 0.0;
    for (int d = 0; d <= 10; ++d) {
        for (double x : {0.01, 0.05, 0.1, 0.15, 0.2}) {
            long double term = 1.0L, sum = 0.0L;
            for (int q = 0; q < 4000; ++q) {
                sum += term;
                term *= static_cast<long double>(x) * (d + 2 * q + 1) * (d + 2 * q + 2) / ((q + 1.0L) * (d + q + 1.0L));
            }
            const double s = std::sqrt(1.0 - 4.0 * x);
            const double B = (1.0 - s) / (2.0 * x);
            worst_gf = std::max(worst_gf, rel_err(static_cast<double>(sum), std::pow(B, d) / s));
        }
    }
    double worst_f = 0.0, worst_step = 0.0;
    std::vector<double> f(101);
    for (int d = -50; d <= 50; ++d) {
        f[d + 50] = gm_frequency(1, 1, 0.3, z1z2_start(d));
        worst_f = std::max(worst_f, std::abs(f[d + 50] - z1z2_frequency_closed(0.3, d)));
    }
    for (int d = 0; d < 50; ++d) worst_step = std::max(worst_step, std::abs(f[d + 51] - f[d + 50] - 0.125));
    const PhaseReport rep = phase_report(1, 1, 0.3, 50);
    const bool report_ok = std::abs(rep.paper_exponent - 0.25) < 1e-12 && std::abs(rep.derived_exponent - 0.125) < 1e-12 &&
                           rep.factor_two && rep.match == PhaseMatch::Derived;
    const bool pass = worst_gf <= 1e-12 && worst_f <= 1e-8 && worst_step <= 1e-10 && report_ok;
    return make(15, "z1 z2 chain frequencies", pass,
                fmt::format("generating function {:.3e} (<= 1e-12); |gm - closed| {:.3e} (<= 1e-8); step {:.3e} "
                            "(<= 1e-10); exponents {:.17g} / {:.17g}, factor two {}",
                            worst_gf, worst_f, worst_step, rep.paper_exponent,
                            rep.derived_exponent, rep.factor_two ? "flagged" : "missing"));
}

CriterionResult determinism();

using Runner = std::function<CriterionResult()>;

const std::vector<Runner>& runners() {
    static const std::vector<Runner> list{closed_vs_oracle,   asymptotics,        frame_orthonormality,
                                          submodule_membership, frequency_consistency, asymptote_gap,
                                          difference_limits,  unitarity_and_flatness, weighted_shifts,
                                          conjugation_identities, compactness_decay, nonsmooth_exponent,
                                          hs_convergence,     taylor_order,       z1z2_chains,
                                          determinism};
    return list;
}

CriterionResult determinism() {
    auto once = [] {
        std::vector<CriterionResult> results;
        for (int id = 1; id < kCriterionCount; ++id) results.push_back(run_criterion(id));
        return render_report(results);
    };
    const std::string first = once();
    const std::string second = once();
    return make(16, "report is reproducible", first == second,
                fmt::format("two in-process reports of {} bytes {}", first.size(),
                            first == second ? "identical" : "differ"));
}

}  // namespace

CriterionResult run_criterion(int id) {
    require(id >= 1 && id <= kCriterionCount, fmt::format("criterion id must be in 1..{} (got {})", kCriterionCount, id));
    const auto start = Clock::now();
    CriterionResult res;
    try {
        res = runners()[static_cast<std::size_t>(id - 1)]();
    } catch (const std::exception& e) {
        res = make(id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what());
    }
    res.id = id;
    res.seconds = seconds_since(start);
    return res;
}

std::vector<CriterionResult> run_all() {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id));
    return out;
}

std::string render_report(const std::vector<CriterionResult>& results, bool with_timing) {
    std::string out;
    int passed = 0;
    for (const CriterionResult& r : results) {
        passed += r.pass ? 1 : 0;
        out += fmt::format("[{}] {:2d} {}: {}", r.pass ? "PASS" : "FAIL", r.id, r.name, r.detail);
        if (with_timing) out += fmt::format(" ({:.2f} s)", r.seconds);
        out += '\n';
    }
    out += fmt::format("{}/{} criteria passed\n", passed, results.size());
    return out;
}

}  // namespace dasub
