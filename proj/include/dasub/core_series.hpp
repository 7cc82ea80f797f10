#pragma once

// Binomial weights of H^2_2 monomials and the chain series
//
//     S_l(k, E, r, n) = sum_{q >= 0} C(n + r + kq, n) E^q q^l
//
// evaluated two independent ways: by roots-of-unity closed forms (l <= 2)
// and by direct summation with a certified geometric tail bound.

#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dasub/types.hpp"

namespace dasub {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// z^e by repeated squaring.
Complex int_pow(Complex z, int e);

BigInt binomial_exact(int N, int K);

/// C(N, K) by multiplicative recurrence. Returns +inf past the double range.
double binomial(int N, int K);

/// omega_{m,n} = ||z1^m z2^n||^2 = 1 / C(m+n, m), exact.
Rational binomial_weight_exact(int m, int n);

/// Correctly rounded omega_{m,n}. Throws RangeError when C(m+n, m) exceeds
/// the double range.
double binomial_weight(int m, int n);

/// Fast omega_{m,n} for inner products (a few ulp, no rounding guarantee).
double monomial_weight(int m, int n);

/// Accepts "p/q", integers and decimal literals ("0.25", "1e-3") exactly.
Rational parse_rational(std::string_view text);

/// Exact value of a binary64 number.
Rational to_rational(double x);

double to_double(const Rational& x);

/// Principal k-th root data for |E| < 1.
struct RootData {
    int k = 1;
    Complex E;
    Complex F;
    std::vector<Complex> zeta;  ///< zeta_j = exp(2 pi i j / k)
    std::vector<Complex> a;     ///< a_j = 1 - zeta_j F

    static RootData make(int k, Complex E);

    /// zeta_j^p with the exponent reduced mod k before rounding.
    Complex zeta_pow(int j, int p) const;

    /// sum_j zeta_j^p (a_0 / a_j)^e, i.e. sum_j zeta_j^p a_j^{-e} scaled by a_0^e.
    Complex scaled_sum(int p, int e) const;

    /// sum_{j >= 1} of the same terms (the subdominant part of scaled_sum).
    Complex scaled_sum_tail(int p, int e) const;
};

/// (1/k) sum_j zeta_j^{s}: the residue-class indicator [s == 0 mod k].
Complex roots_of_unity_filter(int k, int s);

struct SeriesResult {
    Complex value;
    int q_used = 0;           ///< index of the last summed term
    double tail_bound = 0.0;  ///< bound on |sum of the discarded terms|
};

struct ExactSeriesResult {
    Rational value;
    int q_used = 0;
    Rational tail_bound;
};

/// Roots-of-unity closed form of S_l for l in {0, 1, 2}.
Complex closed_sum(int k, Complex E, int r, int n, int l);

/// Direct summation until the certified tail bound is below `tol` (absolute).
SeriesResult series_sum(int k, Complex E, int r, int n, int l, double tol);

/// Same walk, stopping once tail_bound < rel_tol * |partial sum|.
SeriesResult series_sum_relative(int k, Complex E, int r, int n, int l, double rel_tol);

/// Exact partial sum and exact tail certificate for rational E.
ExactSeriesResult series_sum_exact(int k, const Rational& E, int r, int n, int l, const Rational& tol);

/// S_l(k, E, r, n) / (n^l (1 - F)^{-n}) for n in [n_lo, n_hi].
std::vector<double> asymptotic_ratio(int k, double E, int r, int l, int n_lo, int n_hi);

/// Chain weights w_q proportional to C(n + r + kq, n) E^q, normalized to
/// sum 1 over the kept terms. The cut certifies that, for every moment
/// order p <= max_order, the discarded q^p-weighted mass is below
/// rel_tol times the kept one. Overflow-free for large n.
struct ChainWeights {
    std::vector<double> w;
    double rel_tail = 0.0;
    int q_max() const { return static_cast<int>(w.size()) - 1; }
};

ChainWeights chain_weights(int k, double E, int r, int n, int max_order, double rel_tol);

/// Fixed cut at q_max. rel_tail is the certified relative bound when the
/// ratio majorant is below 1 at the cut, +inf otherwise.
ChainWeights chain_weights_fixed(int k, double E, int r, int n, int max_order, int q_max);

/// Normalized raw moments sum w_q q^p for p = 0..max_order.
std::vector<double> weight_moments(const ChainWeights& cw, int max_order);

/// Mean and second raw moment of q from the closed forms, overflow-free.
struct ClosedMoments {
    double mean = 0.0;
    double second = 0.0;
};

ClosedMoments closed_moments(int k, double E, int r, int n);

}  // namespace dasub
