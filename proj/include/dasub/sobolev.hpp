#pragma once

// Besov-Sobolev weights on the ball in C^2 and the smoothed projection family.
//
// With shift a = s + 2 the weight is
//     omega_s(m, n) = m! n! Gamma(a + 1) / Gamma(m + n + a + 1),
// evaluated as a product of ratios so it neither overflows nor needs Gamma.

#include <map>
#include <utility>
#include <vector>

#include "dasub/core_series.hpp"
#include "dasub/types.hpp"

namespace dasub {

/// omega_s(m, n) for s > -3. Throws ParameterError otherwise.
double besov_weight(double s, int m, int n);

/// Integer s >= -2 only.
Rational besov_weight_exact(int s, int m, int n);

/// omega_s(m, n) / omega_{m,n} = prod_{i=1..m+n} i / (s + 2 + i).
double besov_ratio(double s, int total_degree);

/// S(n) = prod_{i=1..n} i / (shift + i); shift = 6 for target order 4,
/// 2l + 3 + sigma in general.
double smoothing_factor(double shift, int n);

struct MixedProjectionMatrix {
    int k = 1;
    double epsilon = 0.0;
    double t = 0.0;
    double s_target = -2.0;
    int derivative_order = 0;
    /// (row, col): row indexes the target orthonormal basis, col the source one
    std::map<std::pair<MonomialIndex, MonomialIndex>, Complex> entries;
};

/// j-th time derivative of the smoothed projection, columns with n <= trunc.n_max.
MixedProjectionMatrix projection_matrix(int k, double epsilon, double t, double s_target, int j,
                                        const TruncationSpec& trunc);

/// Applies the matrix to a vector given in source-basis coordinates.
std::map<MonomialIndex, Complex> apply(const MixedProjectionMatrix& P, const std::map<MonomialIndex, Complex>& x);

struct LadderRow {
    int n = 0;
    double increment = 0.0;    ///< squared HS mass of the columns with this n
    double partial_sum = 0.0;  ///< running sum of increments
};

struct HsResult {
    double norm = 0.0;
    std::vector<LadderRow> ladder;
};

/// HS norm over columns with n <= n_cutoff, from the stored entries.
HsResult hs_norm(const MixedProjectionMatrix& P, int n_cutoff);

/// Same ladder from per-chain moment sums, without materializing entries.
std::vector<LadderRow> hs_ladder(int k, double epsilon, double s_target, int j, int n_cutoff,
                                 double rel_tol = 1e-16);

struct LadderTail {
    double observed = 0.0;       ///< partial(n_last) - partial(n_from)
    double extrapolated = 0.0;   ///< power-law estimate past n_last (inf when not summable)
    double decay_exponent = 0.0; ///< fitted p in increment ~ n^{-p}
    bool increments_vanish = false;

    double total() const { return observed + extrapolated; }
};

/// Tail of the ladder beyond n_from, fitting the increments over the last
/// `fit_window` rows.
LadderTail ladder_tail(const std::vector<LadderRow>& ladder, int n_from, int fit_window = 100);

/// sqrt(E[q^2] - f^2) for the chain weights: the three-term form with
/// closed-form moments.
double nonsmooth_ratio(int k, double epsilon, int r, int n);

/// Same quantity as a central second moment of the truncated weights.
double nonsmooth_ratio_central(int k, double epsilon, int r, int n);

/// HS norm of d^{j-1}P(t+h) - d^{j-1}P(t) - h d^jP(t), columns n <= trunc.n_max.
double taylor_remainder_check(int k, double epsilon, double t, double h, double s_target, int j,
                              const TruncationSpec& trunc);

struct LogLogFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_stderr = 0.0;
    double ci_low = 0.0;   ///< 95%
    double ci_high = 0.0;
};

LogLogFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace dasub
