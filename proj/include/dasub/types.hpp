#pragma once

#include <compare>
#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace dasub {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Exponent pair (m, n) of the monomial z1^m z2^n.
struct MonomialIndex {
    int m = 0;
    int n = 0;
    auto operator<=>(const MonomialIndex&) const = default;
};

/// Index (r, n) of one coefficient chain {(r + kq, n) : q >= 0}, 0 <= r < k.
struct ChainIndex {
    int r = 0;
    int n = 0;
    auto operator<=>(const ChainIndex&) const = default;
};

using ChainTable = std::map<ChainIndex, Complex>;

enum class Backend { Float, Exact };

/// Governs every finite approximation of an infinite chain.
///
/// When `q_max` is unset, each chain is cut at the first q for which the
/// certified geometric bound on the discarded normalized H^2_2 mass drops
/// below tail_tol^2.
struct TruncationSpec {
    std::optional<int> q_max;
    double tail_tol = 1e-14;
    int n_max = 20;
    int m_max = 0;
    Backend backend = Backend::Float;

    void validate() const;
};

class ParameterError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a requested series lies on or outside its disk of convergence.
class DivergenceError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

class RangeError : public std::range_error {
   public:
    using std::range_error::range_error;
};

void require(bool condition, const std::string& message);
void require_k(int k);
void require_epsilon(double epsilon);
void require_chain(int k, ChainIndex c);

}  // namespace dasub
