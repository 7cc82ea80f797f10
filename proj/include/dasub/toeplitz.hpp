#pragma once

// Compressions of z1, z2 and their adjoints to the fiber, in the beta frame.
//
// Matrix convention: entry (row, col) = < T beta_col, beta_row >, so a
// weighted shift has one nonzero entry per column.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dasub/types.hpp"

namespace dasub {

enum class ShiftOp { T1, T1Adj, T2, T2Adj };

std::string to_string(ShiftOp op);
ShiftOp parse_shift_op(const std::string& name);

/// Target chain of op applied to beta_c, wrapping r mod k. n may leave
/// the grid (T2Adj at n = 0 gives n = -1).
ChainIndex shift_target(int k, ShiftOp op, ChainIndex c);

struct ChainOperatorMatrix {
    int k = 1;
    double epsilon = 0.0;
    double t = 0.0;
    ShiftOp op = ShiftOp::T1;
    int n_max = 0;
    std::map<std::pair<ChainIndex, ChainIndex>, Complex> entries;  ///< (row, col)

    bool in_window(ChainIndex c) const { return c.r >= 0 && c.r < k && c.n >= 0 && c.n <= n_max; }

    /// Throws RangeError outside the window; zero for structural zeros.
    Complex at(ChainIndex row, ChainIndex col) const;
};

/// Inner-product assembly over n <= trunc.n_max.
ChainOperatorMatrix toeplitz_matrix(int k, double epsilon, double t, ShiftOp op, const TruncationSpec& trunc);

/// Closed-form weight of op at column (r, n). The T1 wrap entry (r = k-1)
/// carries e^{it} and the T1Adj wrap entry (r = 0) carries e^{-it}, which is
/// what the raw inner products give.
Complex shift_weight(int k, double epsilon, ShiftOp op, int r, int n, double t = 0.0);

/// True when the op's entry at column (r, n) crosses the r = k-1 / r = 0 seam.
bool is_wrap(int k, ShiftOp op, ChainIndex col);

struct ConjugationEntry {
    ChainIndex row;
    ChainIndex col;
    double deviation = 0.0;  ///< |(U* T U)(row, col) - phase * T(row, col)|
    bool wrap = false;
};

struct ConjugationResidual {
    std::vector<ConjugationEntry> entries;
    double max_interior = 0.0;
    double max_wrap = 0.0;
};

/// At t = 0 with U the monodromy diagonal; the predicted phase for column
/// (r, n) is e^{2 pi i (f_col - f_target)} with the wrap identifications
/// f_{k,n} = f_{0,n}, f_{-1,n} = f_{k-1,n}.
ConjugationResidual conjugation_residual(int k, double epsilon, ShiftOp op, const TruncationSpec& trunc);

/// Phase that U* T U - phase T is measured against.
Complex limit_phase(int k, double epsilon, ShiftOp op);

/// d(n) = max_r |e^{2 pi i (f-difference)} - limit phase| * |weight(r, n)|, n = 0..n_max.
std::vector<double> compactness_profile(int k, double epsilon, ShiftOp op, int n_max);

}  // namespace dasub
