#include "dasub/frames.hpp"

#include <cfloat>
#include <cmath>
#include <limits>

#include <fmt/format.h>

namespace dasub {

namespace {

ChainWeights cut_chain(int k, double epsilon, ChainIndex c, int max_order, const TruncationSpec& trunc) {
    const double E = epsilon * epsilon;
    if (trunc.q_max) return chain_weights_fixed(k, E, c.r, c.n, max_order, *trunc.q_max);
    return chain_weights(k, E, c.r, c.n, max_order, trunc.tail_tol * trunc.tail_tol);
}

void check_frame_args(int k, double epsilon, ChainIndex c, int order, const TruncationSpec& trunc) {
    require_chain(k, c);
    require_epsilon(epsilon);
    require(order >= 0, fmt::format("derivative order must be nonnegative (got {})", order));
    trunc.validate();
}

Complex ipow_i(Complex z, int l) {
    Complex out(1.0, 0.0);
    for (int i = 0; i < l; ++i) out *= z;
    return out;
}

double tail_from(const ChainWeights& cw, const std::vector<Complex>& u) {
    if (!std::isfinite(cw.rel_tail)) return std::numeric_limits<double>::infinity();
    double kept = 0.0;
    for (const Complex& x : u) kept += std::norm(x);
    return std::sqrt(cw.rel_tail * kept);
}

FrameVector build(int k, double epsilon, double t, ChainIndex c, int order, FrameKind kind, double frequency,
                  const TruncationSpec& trunc) {
    check_frame_args(k, epsilon, c, order, trunc);
    FrameVector v;
    v.meta = FrameMeta{k, epsilon, t, c, order, kind, kind == FrameKind::Gamma ? frequency : 0.0};
    const ChainWeights cw = cut_chain(k, epsilon, c, 2 * order, trunc);
    const int Q = cw.q_max();
    v.unit_coeffs.resize(static_cast<std::size_t>(Q) + 1);
    if (kind == FrameKind::Alpha) {
        double eq = 1.0;
        for (int q = 0; q <= Q; ++q) {
            const double mag = std::sqrt(binomial(c.r + k * q + c.n, c.n)) * eq;
            const Complex phase = std::polar(1.0, -q * t);
            v.unit_coeffs[q] = mag * phase * ipow_i(Complex(0.0, -static_cast<double>(q)), order);
            eq *= epsilon;
        }
        if (!std::isfinite(v.norm_sq())) throw RangeError("alpha coefficients exceed the double range");
    } else {
        const double f = kind == FrameKind::Gamma ? frequency : 0.0;
        for (int q = 0; q <= Q; ++q) {
            const double phi = f - q;
            v.unit_coeffs[q] = std::sqrt(cw.w[q]) * std::polar(1.0, phi * t) * ipow_i(Complex(0.0, phi), order);
        }
    }
    v.tail_bound = tail_from(cw, v.unit_coeffs);
    return v;
}

}  // namespace

std::string to_string(FrameKind kind) {
    switch (kind) {
        case FrameKind::Alpha:
            return "alpha";
        case FrameKind::Beta:
            return "beta";
        case FrameKind::Gamma:
            return "gamma";
    }
    return "?";
}

Complex FrameVector::coeff_q(int q) const {
    if (q < 0 || q > q_max()) return {0.0, 0.0};
    const MonomialIndex mi = monomial(q);
    return unit_coeffs[q] * std::sqrt(binomial(mi.m + mi.n, mi.n));
}

Complex FrameVector::coeff(MonomialIndex mi) const {
    if (mi.n != meta.chain.n || mi.m < meta.chain.r || (mi.m - meta.chain.r) % meta.k != 0) return {0.0, 0.0};
    return coeff_q((mi.m - meta.chain.r) / meta.k);
}

double FrameVector::norm_sq() const {
    double s = 0.0;
    for (const Complex& x : unit_coeffs) s += std::norm(x);
    return s;
}

Complex inner(const FrameVector& u, const FrameVector& v) {
    if (u.meta.chain.n != v.meta.chain.n) return {0.0, 0.0};
    Complex s(0.0, 0.0);
    int i = 0, j = 0;
    while (i <= u.q_max() && j <= v.q_max()) {
        const int mu = u.monomial(i).m;
        const int mv = v.monomial(j).m;
        if (mu == mv) {
            s += u.unit_coeffs[i] * std::conj(v.unit_coeffs[j]);
            ++i;
            ++j;
        } else if (mu < mv) {
            ++i;
        } else {
            ++j;
        }
    }
    return s;
}

Complex inner(const MonomialVector& u, const FrameVector& v) {
    Complex s(0.0, 0.0);
    for (int q = 0; q <= v.q_max(); ++q) {
        const MonomialIndex mi = v.monomial(q);
        const auto it = u.find(mi);
        if (it == u.end()) continue;
        s += it->second * std::sqrt(monomial_weight(mi.m, mi.n)) * std::conj(v.unit_coeffs[q]);
    }
    return s;
}

Complex inner(const MonomialVector& u, const MonomialVector& v) {
    Complex s(0.0, 0.0);
    for (const auto& [mi, x] : u) {
        const auto it = v.find(mi);
        if (it != v.end()) s += x * std::conj(it->second) * monomial_weight(mi.m, mi.n);
    }
    return s;
}

MonomialVector to_monomials(const FrameVector& v) {
    MonomialVector out;
    for (int q = 0; q <= v.q_max(); ++q) out[v.monomial(q)] = v.coeff_q(q);
    return out;
}

FrameVector alpha(int k, double epsilon, double t, ChainIndex c, const TruncationSpec& trunc) {
    return build(k, epsilon, t, c, 0, FrameKind::Alpha, 0.0, trunc);
}

FrameVector beta(int k, double epsilon, double t, ChainIndex c, const TruncationSpec& trunc) {
    return build(k, epsilon, t, c, 0, FrameKind::Beta, 0.0, trunc);
}

FrameVector gamma(int k, double epsilon, double t, ChainIndex c, double frequency, const TruncationSpec& trunc) {
    return build(k, epsilon, t, c, 0, FrameKind::Gamma, frequency, trunc);
}

FrameVector frame_time_derivative(int k, double epsilon, double t, ChainIndex c, int order, FrameKind kind,
                                  const TruncationSpec& trunc, double frequency) {
    return build(k, epsilon, t, c, order, kind, frequency, trunc);
}

double alpha_norm_sq(int k, double epsilon, int r, int n) {
    require_chain(k, {r, n});
    require_epsilon(epsilon);
    if (epsilon == 0.0) return binomial(r + n, n);
    return closed_sum(k, Complex(epsilon * epsilon, 0.0), r, n, 0).real();
}

std::vector<ChainIndex> chain_grid(int k, int n_max) {
    require_k(k);
    std::vector<ChainIndex> out;
    for (int n = 0; n <= n_max; ++n)
        for (int r = 0; r < k; ++r) out.push_back({r, n});
    return out;
}

Eigen::MatrixXcd gram(int k, double epsilon, double t, const std::vector<ChainIndex>& index_set,
                      const TruncationSpec& trunc) {
    std::vector<FrameVector> frames;
    frames.reserve(index_set.size());
    for (const ChainIndex& c : index_set) frames.push_back(beta(k, epsilon, t, c, trunc));
    const auto N = static_cast<Eigen::Index>(frames.size());
    Eigen::MatrixXcd G(N, N);
    for (Eigen::Index a = 0; a < N; ++a) {
        G(a, a) = inner(frames[a], frames[a]);
        for (Eigen::Index b = a + 1; b < N; ++b) {
            G(a, b) = inner(frames[a], frames[b]);
            G(b, a) = std::conj(G(a, b));
        }
    }
    return G;
}

MembershipResidual membership_residual(int k, double epsilon, double t, ChainIndex c, int M, int N,
                                       const TruncationSpec& trunc) {
    require(M >= 0 && N >= 0, "M and N must be nonnegative");
    FrameVector a = alpha(k, epsilon, t, c, trunc);
    const bool on_chain = N == c.n && M >= c.r && (M - c.r) % k == 0;
    if (on_chain && (M - c.r) / k + 1 > a.q_max()) {
        TruncationSpec wider = trunc;
        wider.q_max = (M - c.r) / k + 1;
        a = alpha(k, epsilon, t, c, wider);
    }
    // <alpha, g> with g = z^{(M+k,N)} - eps e^{it} z^{(M,N)}; raw coefficient times omega
    const MonomialIndex hi{M + k, N};
    const MonomialIndex lo{M, N};
    const Complex top = a.coeff(hi) * monomial_weight(hi.m, hi.n);
    const Complex bottom = a.coeff(lo) * monomial_weight(lo.m, lo.n);
    const Complex shift = std::polar(epsilon, t);
    MembershipResidual res;
    res.value = top - std::conj(shift) * bottom;
    const double g_norm = std::sqrt(monomial_weight(hi.m, hi.n) + epsilon * epsilon * monomial_weight(lo.m, lo.n));
    res.bound = a.tail_bound * g_norm + 16.0 * DBL_EPSILON * (std::abs(top) + std::abs(epsilon * bottom));
    return res;
}

Rational membership_residual_exact(int k, const Rational& epsilon, ChainIndex c, int M, int N,
                                   const TruncationSpec& trunc) {
    require_chain(k, c);
    require(epsilon >= 0 && epsilon < 1, "epsilon must lie in [0, 1)");
    require(M >= 0 && N >= 0, "M and N must be nonnegative");
    int q_cut = 0;
    if (trunc.q_max)
        q_cut = *trunc.q_max;
    else if (trunc.m_max > c.r)
        q_cut = (trunc.m_max - c.r + k - 1) / k;
    // exact table of alpha coefficients C(r+kq+n, n) eps^q, q <= q_cut
    auto coeff = [&](MonomialIndex mi) -> Rational {
        if (mi.n != c.n || mi.m < c.r || (mi.m - c.r) % k != 0) return Rational(0);
        const int q = (mi.m - c.r) / k;
        if (q > q_cut)
            throw RangeError(fmt::format("monomial ({}, {}) lies past the exact cut q_max = {}", mi.m, mi.n, q_cut));
        Rational eq = 1;
        for (int i = 0; i < q; ++i) eq *= epsilon;
        return Rational(binomial_exact(mi.m + mi.n, mi.n)) * eq;
    };
    const MonomialIndex hi{M + k, N};
    const MonomialIndex lo{M, N};
    return coeff(hi) * binomial_weight_exact(hi.m, hi.n) - epsilon * coeff(lo) * binomial_weight_exact(lo.m, lo.n);
}

ChainTable chain_coordinates(const MonomialVector& v, int k, double epsilon, double t,
                             const TruncationSpec& trunc) {
    require_k(k);
    ChainTable out;
    for (const auto& [mi, x] : v) {
        (void)x;
        const ChainIndex c{mi.m % k, mi.n};
        if (out.count(c)) continue;
        out[c] = inner(v, beta(k, epsilon, t, c, trunc));
    }
    return out;
}

MonomialVector synthesize(const ChainTable& table, int k, double epsilon, double t, const TruncationSpec& trunc) {
    MonomialVector out;
    for (const auto& [c, x] : table) {
        const FrameVector b = beta(k, epsilon, t, c, trunc);
        for (int q = 0; q <= b.q_max(); ++q) out[b.monomial(q)] += x * b.coeff_q(q);
    }
    return out;
}

}  // namespace dasub
