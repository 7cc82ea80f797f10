#include "dasub/toeplitz.hpp"

#include <cmath>
#include <set>

#include <fmt/format.h>

#include "dasub/core_series.hpp"
#include "dasub/frames.hpp"
#include "dasub/parallel.hpp"
#include "dasub/transport.hpp"

namespace dasub {

namespace {

using UnitTerms = std::vector<std::pair<MonomialIndex, Complex>>;

// z_i applied in orthonormal-monomial coordinates
UnitTerms multiply_by_coordinate(const FrameVector& v, int which) {
    UnitTerms out;
    out.reserve(v.unit_coeffs.size());
    for (int q = 0; q <= v.q_max(); ++q) {
        const MonomialIndex mi = v.monomial(q);
        const double m = mi.m, n = mi.n;
        if (which == 1)
            out.push_back({{mi.m + 1, mi.n}, v.unit_coeffs[q] * std::sqrt((m + 1.0) / (m + n + 1.0))});
        else
            out.push_back({{mi.m, mi.n + 1}, v.unit_coeffs[q] * std::sqrt((n + 1.0) / (m + n + 1.0))});
    }
    return out;
}

Complex inner_terms(const UnitTerms& u, const FrameVector& v) {
    Complex s(0.0, 0.0);
    for (const auto& [mi, x] : u) {
        if (mi.n != v.meta.chain.n || mi.m < v.meta.chain.r || (mi.m - v.meta.chain.r) % v.meta.k != 0) continue;
        const int q = (mi.m - v.meta.chain.r) / v.meta.k;
        if (q <= v.q_max()) s += x * std::conj(v.unit_coeffs[q]);
    }
    return s;
}

std::set<ChainIndex> support_chains(const UnitTerms& u, int k) {
    std::set<ChainIndex> out;
    for (const auto& term : u) out.insert({term.first.m % k, term.first.n});
    return out;
}

double rs(const RootData& rd, int p, int e) { return rd.scaled_sum(p, e).real(); }

Complex phase_turns(double turns) { return std::polar(1.0, kTwoPi * (turns - std::floor(turns))); }

double limit_exponent(int k, double epsilon, ShiftOp op) {
    const double F = std::pow(epsilon * epsilon, 1.0 / k);
    const double drift = F / (k * (1.0 - F));
    switch (op) {
        case ShiftOp::T1:
            return 1.0 / k;
        case ShiftOp::T1Adj:
            return -1.0 / k;
        case ShiftOp::T2:
            return -drift;
        case ShiftOp::T2Adj:
            return drift;
    }
    return 0.0;
}

}  // namespace

std::string to_string(ShiftOp op) {
    switch (op) {
        case ShiftOp::T1:
            return "T1";
        case ShiftOp::T1Adj:
            return "T1adj";
        case ShiftOp::T2:
            return "T2";
        case ShiftOp::T2Adj:
            return "T2adj";
    }
    return "?";
}

ShiftOp parse_shift_op(const std::string& name) {
    if (name == "T1") return ShiftOp::T1;
    if (name == "T1adj") return ShiftOp::T1Adj;
    if (name == "T2") return ShiftOp::T2;
    if (name == "T2adj") return ShiftOp::T2Adj;
    throw ParameterError(fmt::format("unknown operator '{}' (expected T1, T1adj, T2 or T2adj)", name));
}

ChainIndex shift_target(int k, ShiftOp op, ChainIndex c) {
    switch (op) {
        case ShiftOp::T1:
            return {(c.r + 1) % k, c.n};
        case ShiftOp::T1Adj:
            return {(c.r + k - 1) % k, c.n};
        case ShiftOp::T2:
            return {c.r, c.n + 1};
        case ShiftOp::T2Adj:
            return {c.r, c.n - 1};
    }
    return c;
}

bool is_wrap(int k, ShiftOp op, ChainIndex col) {
    return (op == ShiftOp::T1 && col.r == k - 1) || (op == ShiftOp::T1Adj && col.r == 0);
}

Complex ChainOperatorMatrix::at(ChainIndex row, ChainIndex col) const {
    if (!in_window(row) || !in_window(col))
        throw RangeError(fmt::format("entry ({},{}) x ({},{}) lies outside the truncation window n <= {}", row.r,
                                     row.n, col.r, col.n, n_max));
    const auto it = entries.find({row, col});
    return it == entries.end() ? Complex(0.0, 0.0) : it->second;
}

ChainOperatorMatrix toeplitz_matrix(int k, double epsilon, double t, ShiftOp op, const TruncationSpec& trunc) {
    require_k(k);
    require_epsilon(epsilon);
    trunc.validate();
    ChainOperatorMatrix M;
    M.k = k;
    M.epsilon = epsilon;
    M.t = t;
    M.op = op;
    M.n_max = trunc.n_max;
    const std::vector<ChainIndex> grid = chain_grid(k, trunc.n_max);
    std::vector<FrameVector> frames(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) { frames[i] = beta(k, epsilon, t, grid[i], trunc); });
    auto index_of = [&](ChainIndex c) { return static_cast<std::size_t>(c.n) * k + c.r; };

    const int which = (op == ShiftOp::T1 || op == ShiftOp::T1Adj) ? 1 : 2;
    const bool adjoint = op == ShiftOp::T1Adj || op == ShiftOp::T2Adj;
    std::vector<std::vector<std::pair<std::pair<ChainIndex, ChainIndex>, Complex>>> found(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
        const UnitTerms moved = multiply_by_coordinate(frames[i], which);
        for (const ChainIndex& c : support_chains(moved, k)) {
            if (!M.in_window(c)) continue;
            const Complex value = inner_terms(moved, frames[index_of(c)]);
            if (adjoint)
                found[i].push_back({{grid[i], c}, std::conj(value)});  // <beta_c, z beta_i>
            else
                found[i].push_back({{c, grid[i]}, value});  // <z beta_i, beta_c>
        }
    });
    for (const auto& list : found)
        for (const auto& [key, value] : list) M.entries[key] = value;
    return M;
}

Complex shift_weight(int k, double epsilon, ShiftOp op, int r, int n, double t) {
    require_chain(k, {r, n});
    require_epsilon(epsilon);
    if (epsilon == 0.0) {
        const double rr = r, nn = n;
        switch (op) {
            case ShiftOp::T1:
                return r == k - 1 ? 0.0 : std::sqrt((rr + 1.0) / (rr + nn + 1.0));
            case ShiftOp::T1Adj:
                return r == 0 ? 0.0 : std::sqrt(rr / (rr + nn));
            case ShiftOp::T2:
                return std::sqrt((nn + 1.0) / (rr + nn + 1.0));
            case ShiftOp::T2Adj:
                return n == 0 ? 0.0 : std::sqrt(nn / (rr + nn));
        }
    }
    const RootData rd = RootData::make(k, Complex(epsilon * epsilon, 0.0));
    const double F = rd.F.real();
    const double a0 = rd.a[0].real();
    switch (op) {
        case ShiftOp::T1: {
            const double w = std::sqrt(F) * std::sqrt(rs(rd, -r, n + 1) / rs(rd, -r - 1, n + 1));
            return r == k - 1 ? std::polar(w, t) : Complex(w, 0.0);
        }
        case ShiftOp::T1Adj: {
            const double w = std::sqrt(F) * std::sqrt(rs(rd, -r + 1, n + 1) / rs(rd, -r, n + 1));
            return r == 0 ? std::polar(w, -t) : Complex(w, 0.0);
        }
        case ShiftOp::T2:
            return std::sqrt(a0 * rs(rd, -r, n + 1) / rs(rd, -r, n + 2));
        case ShiftOp::T2Adj:
            if (n == 0) return 0.0;
            return std::sqrt(a0 * rs(rd, -r, n) / rs(rd, -r, n + 1));
    }
    return 0.0;
}

ConjugationResidual conjugation_residual(int k, double epsilon, ShiftOp op, const TruncationSpec& trunc) {
    const ChainOperatorMatrix T = toeplitz_matrix(k, epsilon, 0.0, op, trunc);
    const FrequencyTable f = frequency_table(k, epsilon, trunc.n_max);
    const TransportDiagonal U = monodromy_diagonal(k, epsilon, trunc.n_max);
    ConjugationResidual out;
    for (const auto& [key, value] : T.entries) {
        const auto& [row, col] = key;
        const Complex conjugated = std::conj(U.phases.at(row)) * value * U.phases.at(col);
        // the row is shift_target(col) with r already reduced mod k
        const Complex predicted = phase_turns(f.at(col.r, col.n) - f.at(row.r, row.n)) * value;
        ConjugationEntry e{row, col, std::abs(conjugated - predicted), is_wrap(k, op, col)};
        double& worst = e.wrap ? out.max_wrap : out.max_interior;
        worst = std::max(worst, e.deviation);
        out.entries.push_back(e);
    }
    return out;
}

Complex limit_phase(int k, double epsilon, ShiftOp op) {
    require_k(k);
    require_epsilon(epsilon);
    return phase_turns(limit_exponent(k, epsilon, op));
}

std::vector<double> compactness_profile(int k, double epsilon, ShiftOp op, int n_max) {
    require_k(k);
    require_epsilon(epsilon);
    require(n_max >= 0, "n_max must be nonnegative");
    const double L = limit_exponent(k, epsilon, op);
    // deviation of the conjugation exponent from its limit, as a gap difference
    auto gap = [&](int r, int n) { return frequency_gap(k, epsilon, r, n); };
    std::vector<double> d(static_cast<std::size_t>(n_max) + 1, 0.0);
    parallel_for(d.size(), [&](std::size_t idx) {
        const int n = static_cast<int>(idx);
        double worst = 0.0;
        for (int r = 0; r < k; ++r) {
            const double w = std::abs(shift_weight(k, epsilon, op, r, n));
            if (w == 0.0) continue;
            double dev = 0.0;
            if (epsilon == 0.0) {
                dev = -L;
            } else {
                switch (op) {
                    case ShiftOp::T1:
                        dev = gap(r, n) - gap((r + 1) % k, n);
                        break;
                    case ShiftOp::T1Adj:
                        dev = gap(r, n) - gap((r + k - 1) % k, n);
                        break;
                    case ShiftOp::T2:
                        dev = gap(r, n) - gap(r, n + 1);
                        break;
                    case ShiftOp::T2Adj:
                        dev = gap(r, n) - gap(r, n - 1);
                        break;
                }
            }
            worst = std::max(worst, 2.0 * std::abs(std::sin(kPi * dev)) * w);
        }
        d[idx] = worst;
    });
    return d;
}

}  // namespace dasub
