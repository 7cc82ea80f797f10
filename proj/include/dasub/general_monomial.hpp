#pragma once

// Chains and frequencies for the generator z1^k z2^l - eps e^{it}.
// A chain is {(m0 + kq, n0 + lq) : q >= 0} with m0 < k or n0 < l.

#include <string>
#include <vector>

#include "dasub/types.hpp"

namespace dasub {

/// k^k l^l / (k + l)^{k + l}: eps^2 must stay below this for convergence.
double gm_radius_sq(int k, int l);

/// Chain starts inside 0 <= m <= m_max, 0 <= n <= n_max.
std::vector<MonomialIndex> gm_chain_starts(int k, int l, int m_max, int n_max);

/// Start of the chain containing (m, n). l = 0 is accepted (the z1^k module).
MonomialIndex gm_chain_of(int k, int l, MonomialIndex mi);

/// Mean of q under weights C(m0 + n0 + (k+l)q, m0 + kq) eps^{2q}, with the
/// discarded relative mass of both sums below rel_tol. eps^2 must be at most
/// 99% of gm_radius_sq.
double gm_frequency(int k, int l, double epsilon, MonomialIndex start, double rel_tol = 1e-15);

/// Closed form for k = l = 1, chain label d = m - n:
/// |d| (1 - s) / (2 s) + 2x / s^2, x = eps^2, s = sqrt(1 - 4x).
double z1z2_frequency_closed(double epsilon, int d);

/// Start of the (1,1) chain with label d.
MonomialIndex z1z2_start(int d);

enum class PhaseMatch { Derived, Reported, Neither, NotApplicable };

std::string to_string(PhaseMatch m);

struct PhaseReport {
    int k = 1;
    int l = 1;
    double epsilon = 0.0;
    std::vector<double> m_direction;  ///< f(j+1, 0) - f(j, 0), j = 0..d_max-1
    std::vector<double> n_direction;  ///< f(0, j+1) - f(0, j)
    double lowest_mode = 0.0;         ///< f at start (0, 0)
    double paper_exponent = 0.0;      ///< (1 - s) / s, (1,1) only
    double derived_exponent = 0.0;    ///< (1 - s) / (2 s), (1,1) only
    double small_eps_exponent = 0.0;  ///< 2 eps^2, leading term of the (1 - s) / s expansion
    PhaseMatch match = PhaseMatch::NotApplicable;
    bool factor_two = false;  ///< paper_exponent == 2 * derived_exponent
};

PhaseReport phase_report(int k, int l, double epsilon, int d_max);

std::string phase_report_json(const PhaseReport& report);

}  // namespace dasub
