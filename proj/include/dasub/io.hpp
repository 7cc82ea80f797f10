#pragma once

// CSV and JSON emitters. Doubles go out as %.17g in CSV and as shortest
// round-trip literals in JSON, so equal inputs give byte-identical output.

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "dasub/frames.hpp"
#include "dasub/general_monomial.hpp"
#include "dasub/sobolev.hpp"
#include "dasub/toeplitz.hpp"

namespace dasub {

using Cell = std::variant<long long, double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add(std::vector<Cell> row);
};

std::string format_double(double x);
std::string to_csv(const Table& table);
nlohmann::ordered_json to_json(const Table& table);

/// {k, epsilon, t, r, n, kind, q_max, coeffs: [[m, n, re, im], ...], tail_bound}
nlohmann::ordered_json frame_json(const FrameVector& v);
Table frame_table(const FrameVector& v);

/// (k, epsilon, r, n, f, delta_r, delta_n, asymptote, gap); delta_n is empty
/// at n = 0 and asymptote/gap are empty at eps = 0.
Table transport_table(int k, double epsilon, int n_max);

/// (row_r, row_n, col_r, col_n, re, im)
Table matrix_table(const ChainOperatorMatrix& M);

/// (n, increment, partial_sum)
Table ladder_table(const std::vector<LadderRow>& ladder);

nlohmann::ordered_json phase_report_to_json(const PhaseReport& report);

}  // namespace dasub
