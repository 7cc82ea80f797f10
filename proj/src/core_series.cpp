#include "dasub/core_series.hpp"

#include <algorithm>
#include <cctype>
#include <cfloat>
#include <cmath>
#include <limits>
#include <string>

#include <fmt/format.h>

namespace dasub {

namespace {

constexpr int kMaxTerms = 50'000'000;
constexpr double kRescaleAbove = 1e200;
constexpr double kRescaleBy = 1e-200;

// Direct summation accepts any offset r >= 0; closed forms need 0 <= r < k.
void check_series_args(int k, Complex E, int r, int n, int l, bool any_offset = false) {
    require_k(k);
    if (any_offset)
        require(r >= 0, fmt::format("r must be nonnegative (got {})", r));
    else
        require(r >= 0 && r < k, fmt::format("r must satisfy 0 <= r < k (got r={}, k={})", r, k));
    require(n >= 0, fmt::format("n must be nonnegative (got {})", n));
    require(l >= 0, fmt::format("moment order l must be nonnegative (got {})", l));
    if (!(std::abs(E) < 1.0))
        throw DivergenceError(fmt::format("series diverges: |E| = {} must be < 1", std::abs(E)));
}

// C(n + r + k(q+1), n) / C(n + r + kq, n)
double binomial_step(int k, int r, int n, int q) {
    double f = 1.0;
    const double base = static_cast<double>(r) + static_cast<double>(k) * q;
    for (int i = 1; i <= k; ++i) f *= (base + n + i) / (base + i);
    return f;
}

Rational binomial_step_exact(int k, int r, int n, int q) {
    BigInt num = 1, den = 1;
    const long long base = r + static_cast<long long>(k) * q;
    for (int i = 1; i <= k; ++i) {
        num *= base + n + i;
        den *= base + i;
    }
    return Rational(num, den);
}

// Ratio majorant for q^l-weighted terms: decreasing in q for q >= 1, and
// for q = 0 as well when l = 0.
double moment_ratio(double base_ratio, int q, int l) {
    if (l == 0) return base_ratio;
    const double g = (q + 1.0) / q;
    return base_ratio * std::pow(g, l);
}

template <class Stop>
SeriesResult walk_series(int k, Complex E, int r, int n, int l, Stop stop) {
    check_series_args(k, E, r, n, l, true);
    Complex t(binomial(n + r, n), 0.0);
    if (!std::isfinite(t.real()))
        throw RangeError(fmt::format("C({}, {}) exceeds the double range", n + r, n));
    const double absE = std::abs(E);
    Complex sum(0.0, 0.0);
    for (int q = 0; q < kMaxTerms; ++q) {
        const Complex term = (l == 0) ? t : t * std::pow(static_cast<double>(q), l);
        sum += term;
        if (!std::isfinite(sum.real()) || !std::isfinite(sum.imag()))
            throw RangeError("series partial sum overflowed the double range");
        const double base_ratio = absE * binomial_step(k, r, n, q);
        if (q >= 1 || l == 0) {
            const double rho = moment_ratio(base_ratio, q, l);
            if (rho < 1.0) {
                const double bound = std::abs(term) * rho / (1.0 - rho);
                if (stop(bound, sum)) return SeriesResult{sum, q, bound};
            }
        }
        t *= E * binomial_step(k, r, n, q);
    }
    throw RangeError("series did not reach its tolerance within the term budget");
}

}  // namespace

Complex int_pow(Complex z, int e) {
    if (e < 0) return 1.0 / int_pow(z, -e);
    Complex result(1.0, 0.0);
    while (e > 0) {
        if (e & 1) result *= z;
        z *= z;
        e >>= 1;
    }
    return result;
}

BigInt binomial_exact(int N, int K) {
    require(N >= 0 && K >= 0 && K <= N, fmt::format("invalid binomial C({}, {})", N, K));
    K = std::min(K, N - K);
    BigInt c = 1;
    for (int i = 1; i <= K; ++i) {
        c *= N - K + i;
        c /= i;
    }
    return c;
}

double binomial(int N, int K) {
    require(N >= 0 && K >= 0 && K <= N, fmt::format("invalid binomial C({}, {})", N, K));
    K = std::min(K, N - K);
    double c = 1.0;
    for (int i = 1; i <= K; ++i) c = c * (N - K + i) / i;
    return c;
}

Rational binomial_weight_exact(int m, int n) {
    require(m >= 0 && n >= 0, "monomial exponents must be nonnegative");
    return Rational(BigInt(1), binomial_exact(m + n, m));
}

double binomial_weight(int m, int n) {
    require(m >= 0 && n >= 0, "monomial exponents must be nonnegative");
    const BigInt c = binomial_exact(m + n, m);
    const double cd = c.convert_to<double>();
    if (!std::isfinite(cd) || cd > DBL_MAX)
        throw RangeError(fmt::format("omega_({},{}) underflows: C({}, {}) exceeds the double range", m, n,
                                     m + n, m));
    const Rational exact(BigInt(1), c);
    const double guess = 1.0 / cd;
    double best = guess;
    Rational best_err = abs(to_rational(guess) - exact);
    for (double cand : {std::nextafter(guess, 0.0), std::nextafter(guess, 2.0)}) {
        const Rational err = abs(to_rational(cand) - exact);
        if (err < best_err) {
            best = cand;
            best_err = err;
        }
    }
    return best;
}

double monomial_weight(int m, int n) { return 1.0 / binomial(m + n, std::min(m, n)); }

Rational to_rational(double x) {
    require(std::isfinite(x), "cannot convert a non-finite double to a rational");
    if (x == 0.0) return Rational(0);
    int exponent = 0;
    double mant = std::frexp(std::abs(x), &exponent);
    // mant in [0.5, 1): scale to a 53-bit integer
    const auto bits = static_cast<long long>(std::ldexp(mant, 53));
    exponent -= 53;
    BigInt num = bits;
    BigInt den = 1;
    if (exponent >= 0)
        num <<= exponent;
    else
        den <<= -exponent;
    Rational r(num, den);
    return x < 0 ? Rational(-r) : r;
}

double to_double(const Rational& x) {
    // numerator / denominator each rounded once; adequate for reporting
    const BigInt& num = numerator(x);
    const BigInt& den = denominator(x);
    const auto nbits = static_cast<long long>(num == 0 ? 0 : msb(abs(num)));
    const auto dbits = static_cast<long long>(msb(den));
    const long long shift = std::max<long long>(0, std::max(nbits, dbits) - 900);
    const double nd = BigInt(num >> shift).convert_to<double>();
    const double dd = BigInt(den >> shift).convert_to<double>();
    return nd / dd;
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    require(!s.empty(), "empty rational literal");
    if (const auto slash = s.find('/'); slash != std::string::npos) {
        const Rational num = parse_rational(s.substr(0, slash));
        const Rational den = parse_rational(s.substr(slash + 1));
        require(den != 0, "rational literal has zero denominator");
        return num / den;
    }
    bool negative = false;
    std::size_t pos = 0;
    if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';
    BigInt digits = 0;
    int frac_digits = 0;
    bool seen_dot = false, seen_digit = false;
    for (; pos < s.size(); ++pos) {
        const char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits = digits * 10 + (c - '0');
            seen_digit = true;
            if (seen_dot) ++frac_digits;
        } else if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else {
            break;
        }
    }
    require(seen_digit, fmt::format("malformed rational literal '{}'", text));
    long long exp10 = -frac_digits;
    if (pos < s.size()) {
        require(s[pos] == 'e' || s[pos] == 'E', fmt::format("malformed rational literal '{}'", text));
        try {
            std::size_t used = 0;
            exp10 += std::stoll(s.substr(pos + 1), &used);
            require(pos + 1 + used == s.size(), fmt::format("malformed rational literal '{}'", text));
        } catch (const std::logic_error&) {
            throw ParameterError(fmt::format("malformed rational literal '{}'", text));
        }
    }
    require(std::llabs(exp10) <= 4000, "rational literal exponent out of range");
    BigInt scale = 1;
    for (long long i = 0; i < std::llabs(exp10); ++i) scale *= 10;
    Rational value = exp10 >= 0 ? Rational(digits * scale) : Rational(digits, scale);
    return negative ? Rational(-value) : value;
}

RootData RootData::make(int k, Complex E) {
    require_k(k);
    if (!(std::abs(E) < 1.0))
        throw DivergenceError(fmt::format("root data requires |E| < 1 (got {})", std::abs(E)));
    RootData rd;
    rd.k = k;
    rd.E = E;
    if (E.imag() == 0.0 && E.real() >= 0.0)
        rd.F = Complex(std::pow(E.real(), 1.0 / k), 0.0);
    else
        rd.F = std::pow(E, 1.0 / k);
    rd.zeta.resize(k);
    rd.a.resize(k);
    for (int j = 0; j < k; ++j) {
        rd.zeta[j] = rd.zeta_pow(j, 1);
        rd.a[j] = 1.0 - rd.zeta[j] * rd.F;
    }
    return rd;
}

Complex RootData::zeta_pow(int j, int p) const {
    const long long e = ((static_cast<long long>(j) * p) % k + k) % k;
    if (e == 0) return {1.0, 0.0};
    if (2 * e == k) return {-1.0, 0.0};
    return std::polar(1.0, kTwoPi * static_cast<double>(e) / k);
}

Complex RootData::scaled_sum(int p, int e) const { return Complex(1.0, 0.0) + scaled_sum_tail(p, e); }

Complex RootData::scaled_sum_tail(int p, int e) const {
    Complex s(0.0, 0.0);
    for (int j = 1; j < k; ++j) s += zeta_pow(j, p) * int_pow(a[0] / a[j], e);
    return s;
}

Complex roots_of_unity_filter(int k, int s) {
    require_k(k);
    RootData rd;
    rd.k = k;
    Complex sum(0.0, 0.0);
    for (int j = 0; j < k; ++j) sum += rd.zeta_pow(j, s);
    return sum / static_cast<double>(k);
}

Complex closed_sum(int k, Complex E, int r, int n, int l) {
    check_series_args(k, E, r, n, l);
    require(l <= 2, fmt::format("closed forms exist only for l in {{0, 1, 2}} (got l={})", l));
    if (E == Complex(0.0, 0.0)) {
        // The roots-of-unity form divides by F^r; at E = 0 only q = 0 survives.
        return l == 0 ? Complex(binomial(n + r, n), 0.0) : Complex(0.0, 0.0);
    }
    const RootData rd = RootData::make(k, E);
    const Complex F = rd.F;
    const Complex a0 = rd.a[0];
    const double nn = n;
    const Complex T0 = rd.scaled_sum(-r, n + 1);
    Complex bracket;
    switch (l) {
        case 0:
            bracket = T0;
            break;
        case 1:
            bracket = -static_cast<double>(r) * T0 + F * (nn + 1) * rd.scaled_sum(1 - r, n + 2) / a0;
            break;
        default:
            bracket = static_cast<double>(r) * r * T0 +
                      F * (1.0 - 2.0 * r) * (nn + 1) * rd.scaled_sum(1 - r, n + 2) / a0 +
                      F * F * (nn + 1) * (nn + 2) * rd.scaled_sum(2 - r, n + 3) / (a0 * a0);
            break;
    }
    const Complex value = std::pow(static_cast<double>(k), -1.0 - l) * int_pow(F, -r) * int_pow(a0, -(n + 1)) * bracket;
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
        throw RangeError("closed form overflowed the double range");
    return value;
}

SeriesResult series_sum(int k, Complex E, int r, int n, int l, double tol) {
    require(tol > 0.0, fmt::format("tolerance must be positive (got {})", tol));
    return walk_series(k, E, r, n, l, [tol](double bound, Complex) { return bound < tol; });
}

SeriesResult series_sum_relative(int k, Complex E, int r, int n, int l, double rel_tol) {
    require(rel_tol > 0.0, fmt::format("tolerance must be positive (got {})", rel_tol));
    return walk_series(k, E, r, n, l, [rel_tol](double bound, Complex sum) {
        return bound <= rel_tol * std::abs(sum);
    });
}

ExactSeriesResult series_sum_exact(int k, const Rational& E, int r, int n, int l, const Rational& tol) {
    check_series_args(k, Complex(to_double(E), 0.0), r, n, l, true);
    if (!(abs(E) < 1)) throw DivergenceError("series diverges: |E| must be < 1");
    require(tol > 0, "tolerance must be positive");
    const Rational absE = abs(E);
    Rational t = Rational(binomial_exact(n + r, n));
    Rational sum = 0;
    for (int q = 0; q < kMaxTerms; ++q) {
        Rational term = t;
        if (l > 0) term *= boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(l));
        sum += term;
        const Rational step = binomial_step_exact(k, r, n, q);
        if (q >= 1 || l == 0) {
            Rational rho = absE * step;
            if (l > 0) {
                const Rational g(BigInt(q + 1), BigInt(q));
                for (int i = 0; i < l; ++i) rho *= g;
            }
            if (rho < 1) {
                Rational bound = abs(term) * rho / (1 - rho);
                if (bound < tol) return ExactSeriesResult{sum, q, bound};
            }
        }
        t *= E * step;
    }
    throw RangeError("exact series did not reach its tolerance within the term budget");
}

std::vector<double> asymptotic_ratio(int k, double E, int r, int l, int n_lo, int n_hi) {
    require(E > 0.0 && E < 1.0, fmt::format("asymptotic_ratio requires real E in (0, 1) (got {})", E));
    require(n_lo <= n_hi, "n_range must be nonempty");
    require(n_lo >= (l > 0 ? 1 : 0), "n_range must start at n >= 1 when l > 0");
    const double F = std::pow(E, 1.0 / k);
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n_hi - n_lo + 1));
    for (int n = n_lo; n <= n_hi; ++n) {
        const SeriesResult s = series_sum_relative(k, Complex(E, 0.0), r, n, l, 1e-17);
        const double scale = std::pow(static_cast<double>(n), l) * std::pow(1.0 - F, -static_cast<double>(n));
        out.push_back(s.value.real() / scale);
    }
    return out;
}

ChainWeights chain_weights(int k, double E, int r, int n, int max_order, double rel_tol) {
    check_series_args(k, Complex(E, 0.0), r, n, max_order);
    require(E >= 0.0, "chain weights require real E >= 0");
    require(rel_tol > 0.0, "tolerance must be positive");
    ChainWeights cw;
    std::vector<double> sums(static_cast<std::size_t>(max_order) + 1, 0.0);
    double t = 1.0;  // C(n + r, n) divided out
    for (int q = 0; q < kMaxTerms; ++q) {
        cw.w.push_back(t);
        double qp = 1.0;
        for (int p = 0; p <= max_order; ++p) {
            sums[p] += t * qp;
            qp *= q;
        }
        const double base_ratio = E * binomial_step(k, r, n, q);
        bool done = q >= 1 || max_order == 0;
        double worst = 0.0;
        if (done) {
            qp = 1.0;
            for (int p = 0; p <= max_order && done; ++p) {
                const double rho = moment_ratio(base_ratio, q, p);
                if (rho >= 1.0) {
                    done = false;
                    break;
                }
                const double bound = t * qp * rho / (1.0 - rho);
                if (sums[p] > 0.0) {
                    worst = std::max(worst, bound / sums[p]);
                    if (bound > rel_tol * sums[p]) done = false;
                } else if (bound > 0.0) {
                    done = false;
                }
                qp *= q;
            }
        }
        if (done) {
            cw.rel_tail = worst;
            break;
        }
        t *= base_ratio;
        if (t > kRescaleAbove) {
            t *= kRescaleBy;
            for (double& x : cw.w) x *= kRescaleBy;
            for (double& s : sums) s *= kRescaleBy;
        }
        if (q + 1 == kMaxTerms) throw RangeError("chain weights did not converge within the term budget");
    }
    const double total = sums[0];
    for (double& x : cw.w) x /= total;
    return cw;
}

ChainWeights chain_weights_fixed(int k, double E, int r, int n, int max_order, int q_max) {
    check_series_args(k, Complex(E, 0.0), r, n, max_order);
    require(E >= 0.0, "chain weights require real E >= 0");
    require(q_max >= 0, "q_max must be nonnegative");
    ChainWeights cw;
    std::vector<double> sums(static_cast<std::size_t>(max_order) + 1, 0.0);
    double t = 1.0;
    for (int q = 0; q <= q_max; ++q) {
        cw.w.push_back(t);
        double qp = 1.0;
        for (int p = 0; p <= max_order; ++p) {
            sums[p] += t * qp;
            qp *= q;
        }
        if (q == q_max) break;
        t *= E * binomial_step(k, r, n, q);
        if (t > kRescaleAbove) {
            t *= kRescaleBy;
            for (double& x : cw.w) x *= kRescaleBy;
            for (double& s : sums) s *= kRescaleBy;
        }
    }
    const double base_ratio = E * binomial_step(k, r, n, q_max);
    double worst = 0.0;
    double qp = 1.0;
    for (int p = 0; p <= max_order; ++p) {
        if (q_max == 0 && p > 0) {
            if (base_ratio > 0.0) worst = std::numeric_limits<double>::infinity();
            break;
        }
        const double rho = moment_ratio(base_ratio, q_max, p);
        if (rho >= 1.0) {
            worst = std::numeric_limits<double>::infinity();
            break;
        }
        const double bound = t * qp * rho / (1.0 - rho);
        if (sums[p] > 0.0)
            worst = std::max(worst, bound / sums[p]);
        else if (bound > 0.0)
            worst = std::numeric_limits<double>::infinity();
        qp *= q_max;
    }
    cw.rel_tail = worst;
    const double total = sums[0];
    for (double& x : cw.w) x /= total;
    return cw;
}

std::vector<double> weight_moments(const ChainWeights& cw, int max_order) {
    std::vector<double> m(static_cast<std::size_t>(max_order) + 1, 0.0);
    for (std::size_t q = 0; q < cw.w.size(); ++q) {
        double qp = 1.0;
        for (int p = 0; p <= max_order; ++p) {
            m[p] += cw.w[q] * qp;
            qp *= static_cast<double>(q);
        }
    }
    return m;
}

ClosedMoments closed_moments(int k, double E, int r, int n) {
    check_series_args(k, Complex(E, 0.0), r, n, 0);
    require(E >= 0.0, "closed moments require real E >= 0");
    if (E == 0.0) return {};
    const RootData rd = RootData::make(k, Complex(E, 0.0));
    const Complex F = rd.F;
    const Complex a0 = rd.a[0];
    const double nn = n;
    const double rr = r;
    const Complex T0 = rd.scaled_sum(-r, n + 1);
    const Complex T1 = rd.scaled_sum(1 - r, n + 2) / a0;
    const Complex T2 = rd.scaled_sum(2 - r, n + 3) / (a0 * a0);
    const Complex mean = (-rr * T0 + F * (nn + 1) * T1) / (static_cast<double>(k) * T0);
    const Complex second = (rr * rr * T0 + F * (1.0 - 2.0 * rr) * (nn + 1) * T1 + F * F * (nn + 1) * (nn + 2) * T2) /
                           (static_cast<double>(k) * k * T0);
    return {mean.real(), second.real()};
}

}  // namespace dasub
