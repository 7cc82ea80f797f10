#include "dasub/types.hpp"

#include <cmath>

#include <fmt/format.h>

namespace dasub {

void require(bool condition, const std::string& message) {
    if (!condition) throw ParameterError(message);
}

void require_k(int k) { require(k >= 1, fmt::format("k must be a positive integer (got {})", k)); }

void require_epsilon(double epsilon) {
    require(std::isfinite(epsilon) && epsilon >= 0.0 && epsilon < 1.0,
            fmt::format("epsilon must lie in [0, 1) (got {})", epsilon));
}

void require_chain(int k, ChainIndex c) {
    require_k(k);
    require(c.r >= 0 && c.r < k && c.n >= 0,
            fmt::format("chain index (r={}, n={}) is outside J for k={}", c.r, c.n, k));
}

void TruncationSpec::validate() const {
    if (q_max) require(*q_max >= 0, "q_max must be nonnegative");
    require(tail_tol > 0.0 && std::isfinite(tail_tol), "tail_tol must be positive");
    require(n_max >= 0, "n_max must be nonnegative");
    require(m_max >= 0, "m_max must be nonnegative");
}

}  // namespace dasub
