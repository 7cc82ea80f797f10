#pragma once

#include <map>

#include "dasub/frames.hpp"
#include "dasub/types.hpp"

namespace dasub {

/// Transport frequency f_{r,n}: mean of q under the chain weights
/// C(n + r + kq, n) eps^{2q}. Closed form; 0 at eps = 0.
double frequency(int k, double epsilon, int r, int n);

/// Same mean, computed as a ratio of truncated series.
double frequency_series(int k, double epsilon, int r, int n, double rel_tol = 1e-16);

/// F(n + 1) / (k (1 - F)) - r / k, F = eps^{2/k}.
double frequency_asymptote(int k, double epsilon, int r, int n);

/// frequency - frequency_asymptote without subtracting two large numbers.
double frequency_gap(int k, double epsilon, int r, int n);

struct FrequencyTable {
    int k = 1;
    double epsilon = 0.0;
    std::map<ChainIndex, double> values;

    double at(int r, int n) const;
};

FrequencyTable frequency_table(int k, double epsilon, int n_max);

/// Multiplies every coordinate by e^{i f t}; the output is read in the beta(t) frame.
ChainTable transport_apply(int k, double epsilon, double t, const ChainTable& v);

struct TransportDiagonal {
    double t = 0.0;
    std::map<ChainIndex, Complex> phases;
};

/// e^{i f t} with f t reduced mod 2 pi first.
Complex transport_phase(double f, double t);

/// U = U_{2 pi}, n <= n_max.
TransportDiagonal monodromy_diagonal(int k, double epsilon, int n_max);

struct FrequencyDifferences {
    std::map<ChainIndex, double> delta_r;  ///< f_{r,n} - f_{r-1,n}, f_{-1,n} := f_{k-1,n}
    std::map<ChainIndex, double> delta_n;  ///< f_{r,n} - f_{r,n-1}, n >= 1
    double limit_r = 0.0;                  ///< -1/k
    double limit_n = 0.0;                  ///< F / (k (1 - F))
};

FrequencyDifferences frequency_differences(int k, double epsilon, int n_max);

/// Distance between a and b on R/Z.
double distance_mod1(double a, double b);

/// || P_t d/dt v ||, v = gamma_{r,n}(t) (or beta when `use_beta`), with the
/// projection taken through chain_coordinates.
double flatness_residual(int k, double epsilon, double t, ChainIndex c, const TruncationSpec& trunc,
                         bool use_beta = false);

}  // namespace dasub
