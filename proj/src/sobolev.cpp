#include "dasub/sobolev.hpp"

#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "dasub/parallel.hpp"
#include "dasub/transport.hpp"

namespace dasub {

namespace {

void require_branch(double s) {
    require(std::isfinite(s) && s > -3.0,
            fmt::format("Besov-Sobolev order s = {} is outside the branch s > -3", s));
}

struct ChainData {
    std::vector<double> A;  // normalized chain weights
    std::vector<double> P;  // besov ratio of each chain monomial
};

ChainData chain_data(int k, double epsilon, int r, int n, double s_target, int max_order, double rel_tol,
                     std::optional<int> q_max) {
    ChainData d;
    const double E = epsilon * epsilon;
    const ChainWeights cw = q_max ? chain_weights_fixed(k, E, r, n, max_order, *q_max)
                                  : chain_weights(k, E, r, n, max_order, rel_tol);
    d.A = cw.w;
    const double a = s_target + 2.0;
    d.P.resize(d.A.size());
    double p = besov_ratio(s_target, r + n);
    for (std::size_t q = 0; q < d.A.size(); ++q) {
        d.P[q] = p;
        const int base = r + k * static_cast<int>(q) + n;
        for (int i = 1; i <= k; ++i) p *= (base + i) / (a + base + i);
    }
    return d;
}

// sum_{Q,q} A_Q A_q P_q (Q - q)^{2j} via central moments of A about its mean
double chain_hs_sq(const ChainData& d, int j) {
    const int order = 2 * j;
    double mean = 0.0;
    for (std::size_t q = 0; q < d.A.size(); ++q) mean += d.A[q] * static_cast<double>(q);
    std::vector<double> mu(order + 1, 0.0);
    for (std::size_t q = 0; q < d.A.size(); ++q) {
        const double x = static_cast<double>(q) - mean;
        double xp = 1.0;
        for (int i = 0; i <= order; ++i) {
            mu[i] += d.A[q] * xp;
            xp *= x;
        }
    }
    std::vector<double> binom(order + 1, 1.0);
    for (int i = 1; i <= order; ++i) binom[i] = binom[i - 1] * (order - i + 1) / i;
    double total = 0.0;
    for (std::size_t q = 0; q < d.A.size(); ++q) {
        // sum_Q A_Q ((Q - mean) + (mean - q))^{order}
        const double c = mean - static_cast<double>(q);
        double m = 0.0, cp = 1.0;
        for (int i = order; i >= 0; --i) {
            m += binom[i] * mu[i] * cp;
            cp *= c;
        }
        total += d.A[q] * d.P[q] * m;
    }
    return total;
}

// |e^{ix} - 1 - ix|^2 without cancellation for small x
double expm1_linear_sq(double x) {
    const double s = std::sin(0.5 * x);
    const double re = -2.0 * s * s;
    double im;
    if (std::abs(x) < 0.5) {
        const double x2 = x * x;
        double term = -x * x2 / 6.0;
        im = term;
        for (int i = 2; i < 12; ++i) {
            term *= -x2 / ((2.0 * i) * (2.0 * i + 1.0));
            im += term;
        }
    } else {
        im = std::sin(x) - x;
    }
    return re * re + im * im;
}

}  // namespace

double besov_ratio(double s, int total_degree) {
    require_branch(s);
    require(total_degree >= 0, "total degree must be nonnegative");
    const double a = s + 2.0;
    double p = 1.0;
    for (int i = 1; i <= total_degree; ++i) p *= i / (a + i);
    return p;
}

double besov_weight(double s, int m, int n) {
    require_branch(s);
    require(m >= 0 && n >= 0, "monomial exponents must be nonnegative");
    const double a = s + 2.0;
    double w = 1.0;
    for (int i = 1; i <= m; ++i) w *= i / (a + i);
    for (int i = 1; i <= n; ++i) w *= i / (a + m + i);
    return w;
}

Rational besov_weight_exact(int s, int m, int n) {
    require(s >= -2, fmt::format("exact Besov-Sobolev weights need integer s >= -2 (got {})", s));
    require(m >= 0 && n >= 0, "monomial exponents must be nonnegative");
    const int a = s + 2;
    BigInt num = 1, den = 1;
    for (int i = 1; i <= m; ++i) {
        num *= i;
        den *= a + i;
    }
    for (int i = 1; i <= n; ++i) {
        num *= i;
        den *= a + m + i;
    }
    return Rational(num, den);
}

double smoothing_factor(double shift, int n) {
    require(shift > -1.0, fmt::format("smoothing shift must exceed -1 (got {})", shift));
    require(n >= 0, "n must be nonnegative");
    double p = 1.0;
    for (int i = 1; i <= n; ++i) p *= i / (shift + i);
    return p;
}

MixedProjectionMatrix projection_matrix(int k, double epsilon, double t, double s_target, int j,
                                        const TruncationSpec& trunc) {
    require_k(k);
    require_epsilon(epsilon);
    require_branch(s_target);
    require(j >= 0, "derivative order must be nonnegative");
    trunc.validate();
    MixedProjectionMatrix M{k, epsilon, t, s_target, j, {}};
    const std::vector<ChainIndex> grid = chain_grid(k, trunc.n_max);
    std::vector<std::vector<std::pair<std::pair<MonomialIndex, MonomialIndex>, Complex>>> cols(grid.size());
    parallel_for(grid.size(), [&](std::size_t idx) {
        const ChainIndex c = grid[idx];
        const ChainData d = chain_data(k, epsilon, c.r, c.n, s_target, 2 * j, trunc.tail_tol * trunc.tail_tol,
                                       trunc.q_max);
        const int Q_max = static_cast<int>(d.A.size()) - 1;
        for (int Q = 0; Q <= Q_max; ++Q) {
            for (int q = 0; q <= Q_max; ++q) {
                const int delta = Q - q;
                Complex factor = std::polar(1.0, delta * t);
                for (int i = 0; i < j; ++i) factor *= Complex(0.0, static_cast<double>(delta));
                const Complex v = std::sqrt(d.A[Q]) * std::sqrt(d.A[q] * d.P[q]) * factor;
                if (v == Complex(0.0, 0.0)) continue;
                cols[idx].push_back({{{c.r + k * q, c.n}, {c.r + k * Q, c.n}}, v});
            }
        }
    });
    for (const auto& list : cols)
        for (const auto& [key, v] : list) M.entries[key] = v;
    return M;
}

std::map<MonomialIndex, Complex> apply(const MixedProjectionMatrix& P, const std::map<MonomialIndex, Complex>& x) {
    std::map<MonomialIndex, Complex> y;
    for (const auto& [key, v] : P.entries) {
        const auto it = x.find(key.second);
        if (it != x.end()) y[key.first] += v * it->second;
    }
    return y;
}

HsResult hs_norm(const MixedProjectionMatrix& P, int n_cutoff) {
    std::map<int, double> per_n;
    for (const auto& [key, v] : P.entries) {
        if (key.second.n <= n_cutoff) per_n[key.second.n] += std::norm(v);
    }
    HsResult out;
    double running = 0.0;
    for (int n = 0; n <= n_cutoff; ++n) {
        const auto it = per_n.find(n);
        const double inc = it == per_n.end() ? 0.0 : it->second;
        running += inc;
        out.ladder.push_back({n, inc, running});
    }
    out.norm = std::sqrt(running);
    return out;
}

std::vector<LadderRow> hs_ladder(int k, double epsilon, double s_target, int j, int n_cutoff, double rel_tol) {
    require_k(k);
    require_epsilon(epsilon);
    require_branch(s_target);
    require(j >= 0, "derivative order must be nonnegative");
    require(n_cutoff >= 0, "n_cutoff must be nonnegative");
    std::vector<double> inc(static_cast<std::size_t>(n_cutoff) + 1, 0.0);
    parallel_for(inc.size(), [&](std::size_t idx) {
        const int n = static_cast<int>(idx);
        double s = 0.0;
        for (int r = 0; r < k; ++r)
            s += chain_hs_sq(chain_data(k, epsilon, r, n, s_target, 2 * j, rel_tol, std::nullopt), j);
        inc[idx] = s;
    });
    std::vector<LadderRow> out;
    double running = 0.0;
    for (int n = 0; n <= n_cutoff; ++n) {
        running += inc[n];
        out.push_back({n, inc[n], running});
    }
    return out;
}

LadderTail ladder_tail(const std::vector<LadderRow>& ladder, int n_from, int fit_window) {
    require(!ladder.empty(), "empty ladder");
    require(n_from >= ladder.front().n && n_from <= ladder.back().n, "n_from outside the ladder");
    require(fit_window >= 2 && fit_window <= static_cast<int>(ladder.size()), "fit window does not fit the ladder");
    LadderTail tail;
    const LadderRow& last = ladder.back();
    const LadderRow& from = ladder[static_cast<std::size_t>(n_from - ladder.front().n)];
    tail.observed = last.partial_sum - from.partial_sum;
    std::vector<double> xs, ys;
    for (std::size_t i = ladder.size() - fit_window; i < ladder.size(); ++i) {
        if (ladder[i].increment <= 0.0 || ladder[i].n <= 0) continue;
        xs.push_back(ladder[i].n);
        ys.push_back(ladder[i].increment);
    }
    if (xs.size() < 2) {
        // identically zero increments
        tail.increments_vanish = true;
        tail.decay_exponent = std::numeric_limits<double>::infinity();
        return tail;
    }
    const LogLogFit fit = fit_loglog(xs, ys);
    tail.decay_exponent = -fit.slope;
    tail.increments_vanish = tail.decay_exponent > 0.0;
    if (tail.decay_exponent > 1.0) {
        // sum_{n > N} C n^{-p} <= C N^{1-p} / (p - 1)
        const double N = last.n;
        tail.extrapolated = last.increment * N / (tail.decay_exponent - 1.0);
    } else {
        tail.extrapolated = std::numeric_limits<double>::infinity();
    }
    return tail;
}

double nonsmooth_ratio(int k, double epsilon, int r, int n) {
    require_chain(k, {r, n});
    require_epsilon(epsilon);
    if (epsilon == 0.0) return 0.0;
    const double f = frequency(k, epsilon, r, n);
    const ClosedMoments m = closed_moments(k, epsilon * epsilon, r, n);
    const double value = f * f - 2.0 * f * m.mean + m.second;
    return std::sqrt(std::max(value, 0.0));
}

double nonsmooth_ratio_central(int k, double epsilon, int r, int n) {
    require_chain(k, {r, n});
    require_epsilon(epsilon);
    if (epsilon == 0.0) return 0.0;
    const ChainWeights cw = chain_weights(k, epsilon * epsilon, r, n, 2, 1e-17);
    double mean = 0.0;
    for (std::size_t q = 0; q < cw.w.size(); ++q) mean += cw.w[q] * static_cast<double>(q);
    double var = 0.0;
    for (std::size_t q = 0; q < cw.w.size(); ++q) {
        const double x = static_cast<double>(q) - mean;
        var += cw.w[q] * x * x;
    }
    return std::sqrt(var);
}

double taylor_remainder_check(int k, double epsilon, double t, double h, double s_target, int j,
                              const TruncationSpec& trunc) {
    require_k(k);
    require_epsilon(epsilon);
    require_branch(s_target);
    require(h != 0.0 && std::isfinite(h), "step h must be nonzero");
    require(j >= 1, "Taylor remainder needs derivative order j >= 1");
    trunc.validate();
    (void)t;  // entry moduli do not depend on t
    const std::vector<ChainIndex> grid = chain_grid(k, trunc.n_max);
    std::vector<double> per_chain(grid.size(), 0.0);
    parallel_for(grid.size(), [&](std::size_t idx) {
        const ChainIndex c = grid[idx];
        const ChainData d = chain_data(k, epsilon, c.r, c.n, s_target, 2 * j, trunc.tail_tol * trunc.tail_tol,
                                       trunc.q_max);
        const int Q_max = static_cast<int>(d.A.size()) - 1;
        double s = 0.0;
        for (int delta = -Q_max; delta <= Q_max; ++delta) {
            if (delta == 0) continue;
            double pair_sum = 0.0;
            for (int q = std::max(0, -delta); q <= Q_max && q + delta <= Q_max; ++q)
                pair_sum += d.A[q + delta] * d.A[q] * d.P[q];
            const double dd = delta;
            s += pair_sum * std::pow(dd * dd, j - 1) * expm1_linear_sq(dd * h);
        }
        per_chain[idx] = s;
    });
    double total = 0.0;
    for (double x : per_chain) total += x;
    return std::sqrt(total);
}

LogLogFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y) {
    require(x.size() == y.size() && x.size() >= 3, "log-log fit needs at least three points");
    const auto N = static_cast<double>(x.size());
    double sx = 0, sy = 0;
    std::vector<double> lx(x.size()), ly(y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        require(x[i] > 0.0 && y[i] > 0.0, "log-log fit needs positive data");
        lx[i] = std::log(x[i]);
        ly[i] = std::log(y[i]);
        sx += lx[i];
        sy += ly[i];
    }
    const double mx = sx / N, my = sy / N;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    LogLogFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double rss = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double e = ly[i] - fit.intercept - fit.slope * lx[i];
        rss += e * e;
    }
    fit.slope_stderr = std::sqrt(rss / (N - 2.0) / sxx);
    fit.ci_low = fit.slope - 1.96 * fit.slope_stderr;
    fit.ci_high = fit.slope + 1.96 * fit.slope_stderr;
    return fit;
}

}  // namespace dasub
