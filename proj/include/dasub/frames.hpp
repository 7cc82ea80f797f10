#pragma once

// Frames of the orthocomplement of the submodule generated by z1^k - eps e^{it}.
//
// Every frame element lives on one chain {(r + kq, n) : q >= 0}. Coefficients
// are stored per q in orthonormal-monomial coordinates, i.e. as
// x_q * ||z1^{r+kq} z2^n||, so inner products are plain dot products and
// large n does not overflow.

#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dasub/core_series.hpp"
#include "dasub/types.hpp"

namespace dasub {

enum class FrameKind { Alpha, Beta, Gamma };

std::string to_string(FrameKind kind);

struct FrameMeta {
    int k = 1;
    double epsilon = 0.0;
    double t = 0.0;
    ChainIndex chain;
    int order = 0;  ///< time-derivative order
    FrameKind kind = FrameKind::Alpha;
    double frequency = 0.0;  ///< only meaningful for Gamma
};

struct FrameVector {
    FrameMeta meta;
    std::vector<Complex> unit_coeffs;  ///< coefficient against z^{(r+kq, n)} / ||z^{(r+kq, n)}||
    double tail_bound = 0.0;           ///< H^2 norm bound of the discarded part

    int q_max() const { return static_cast<int>(unit_coeffs.size()) - 1; }
    MonomialIndex monomial(int q) const { return {meta.chain.r + meta.k * q, meta.chain.n}; }

    /// Raw coefficient of z1^m z2^n (zero off the chain or past the cut).
    Complex coeff(MonomialIndex mi) const;
    Complex coeff_q(int q) const;

    double norm_sq() const;
};

/// Finitely supported vector in raw monomial coordinates.
using MonomialVector = std::map<MonomialIndex, Complex>;

/// <u, v> in H^2_2, linear in u.
Complex inner(const FrameVector& u, const FrameVector& v);
Complex inner(const MonomialVector& u, const FrameVector& v);
Complex inner(const MonomialVector& u, const MonomialVector& v);

MonomialVector to_monomials(const FrameVector& v);

FrameVector alpha(int k, double epsilon, double t, ChainIndex c, const TruncationSpec& trunc);
FrameVector beta(int k, double epsilon, double t, ChainIndex c, const TruncationSpec& trunc);
/// e^{i f t} beta, with the frequency supplied by the caller.
FrameVector gamma(int k, double epsilon, double t, ChainIndex c, double frequency, const TruncationSpec& trunc);

/// d^l/dt^l of the requested kind, termwise.
FrameVector frame_time_derivative(int k, double epsilon, double t, ChainIndex c, int order, FrameKind kind,
                                  const TruncationSpec& trunc, double frequency = 0.0);

/// ||alpha_{r,n}||^2 by the roots-of-unity closed form (series at eps = 0).
double alpha_norm_sq(int k, double epsilon, int r, int n);

/// Gram matrix of the beta frame over `index_set`.
Eigen::MatrixXcd gram(int k, double epsilon, double t, const std::vector<ChainIndex>& index_set,
                      const TruncationSpec& trunc);

std::vector<ChainIndex> chain_grid(int k, int n_max);

struct MembershipResidual {
    Complex value;
    double bound = 0.0;
};

/// <alpha_{r,n}, z1^M z2^N (z1^k - eps e^{it})>.
MembershipResidual membership_residual(int k, double epsilon, double t, ChainIndex c, int M, int N,
                                       const TruncationSpec& trunc);

/// Same pairing at t = 0 in exact rationals. The table is cut at
/// trunc.q_max when set, otherwise at the smallest q covering m_max.
/// Throws RangeError when z1^{M+k} z2^N falls outside the cut.
Rational membership_residual_exact(int k, const Rational& epsilon, ChainIndex c, int M, int N,
                                   const TruncationSpec& trunc);

/// <v, beta_{r,n}(t)> for every chain meeting the support of v.
ChainTable chain_coordinates(const MonomialVector& v, int k, double epsilon, double t, const TruncationSpec& trunc);

/// sum_c table[c] beta_c(t).
MonomialVector synthesize(const ChainTable& table, int k, double epsilon, double t, const TruncationSpec& trunc);

}  // namespace dasub
