#include "dasub/io.hpp"

#include <fmt/format.h>

#include "dasub/transport.hpp"

namespace dasub {

namespace {

std::string cell_text(const Cell& c) {
    if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
    if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
    const auto& s = std::get<std::string>(c);
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char ch : s) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    return quoted + "\"";
}

}  // namespace

void Table::add(std::vector<Cell> row) {
    require(row.size() == columns.size(), "table row width does not match the header");
    rows.push_back(std::move(row));
}

std::string format_double(double x) { return fmt::format("{:.17g}", x); }

std::string to_csv(const Table& table) {
    std::string out;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out += ',';
        out += table.columns[i];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += cell_text(row[i]);
        }
        out += '\n';
    }
    return out;
}

nlohmann::ordered_json to_json(const Table& table) {
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::visit(
                [&](const auto& v) {
                    using V = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<V, std::string>) {
                        // empty cells are absent values
                        obj[table.columns[i]] = v.empty() ? nlohmann::ordered_json() : nlohmann::ordered_json(v);
                    } else {
                        obj[table.columns[i]] = v;
                    }
                },
                row[i]);
        }
        rows.push_back(std::move(obj));
    }
    return rows;
}

nlohmann::ordered_json frame_json(const FrameVector& v) {
    nlohmann::ordered_json j;
    j["k"] = v.meta.k;
    j["epsilon"] = v.meta.epsilon;
    j["t"] = v.meta.t;
    j["r"] = v.meta.chain.r;
    j["n"] = v.meta.chain.n;
    j["kind"] = to_string(v.meta.kind);
    j["q_max"] = v.q_max();
    auto coeffs = nlohmann::ordered_json::array();
    for (int q = 0; q <= v.q_max(); ++q) {
        const MonomialIndex mi = v.monomial(q);
        const Complex c = v.coeff_q(q);
        coeffs.push_back({mi.m, mi.n, c.real(), c.imag()});
    }
    j["coeffs"] = std::move(coeffs);
    j["tail_bound"] = v.tail_bound;
    return j;
}

Table frame_table(const FrameVector& v) {
    Table t{{"m", "n", "re", "im"}, {}};
    for (int q = 0; q <= v.q_max(); ++q) {
        const MonomialIndex mi = v.monomial(q);
        const Complex c = v.coeff_q(q);
        t.add({static_cast<long long>(mi.m), static_cast<long long>(mi.n), c.real(), c.imag()});
    }
    return t;
}

Table transport_table(int k, double epsilon, int n_max) {
    Table t{{"k", "epsilon", "r", "n", "f", "delta_r", "delta_n", "asymptote", "gap"}, {}};
    const FrequencyTable freq = frequency_table(k, epsilon, n_max);
    const bool have_diffs = n_max >= 2;
    FrequencyDifferences diffs;
    if (have_diffs) diffs = frequency_differences(k, epsilon, n_max);
    for (const ChainIndex& c : chain_grid(k, n_max)) {
        std::vector<Cell> row{static_cast<long long>(k), epsilon, static_cast<long long>(c.r),
                              static_cast<long long>(c.n), freq.at(c.r, c.n)};
        if (have_diffs) {
            row.emplace_back(diffs.delta_r.at(c));
            row.emplace_back(c.n >= 1 ? Cell(diffs.delta_n.at(c)) : Cell(std::string()));
        } else {
            // differences fall back to direct subtraction on short tables
            const int prev = c.r == 0 ? k - 1 : c.r - 1;
            row.emplace_back(freq.at(c.r, c.n) - freq.at(prev, c.n));
            row.emplace_back(c.n >= 1 ? Cell(freq.at(c.r, c.n) - freq.at(c.r, c.n - 1)) : Cell(std::string()));
        }
        if (epsilon > 0.0) {
            row.emplace_back(frequency_asymptote(k, epsilon, c.r, c.n));
            row.emplace_back(frequency_gap(k, epsilon, c.r, c.n));
        } else {
            row.emplace_back(std::string());
            row.emplace_back(std::string());
        }
        t.add(std::move(row));
    }
    return t;
}

Table matrix_table(const ChainOperatorMatrix& M) {
    Table t{{"row_r", "row_n", "col_r", "col_n", "re", "im"}, {}};
    for (const auto& [key, v] : M.entries) {
        t.add({static_cast<long long>(key.first.r), static_cast<long long>(key.first.n),
               static_cast<long long>(key.second.r), static_cast<long long>(key.second.n), v.real(), v.imag()});
    }
    return t;
}

Table ladder_table(const std::vector<LadderRow>& ladder) {
    Table t{{"n", "increment", "partial_sum"}, {}};
    for (const LadderRow& row : ladder) t.add({static_cast<long long>(row.n), row.increment, row.partial_sum});
    return t;
}

nlohmann::ordered_json phase_report_to_json(const PhaseReport& report) {
    nlohmann::ordered_json j;
    j["k"] = report.k;
    j["l"] = report.l;
    j["epsilon"] = report.epsilon;
    j["per_step_differences"] = {{"m_direction", report.m_direction}, {"n_direction", report.n_direction}};
    j["lowest_mode"] = report.lowest_mode;
    if (report.k == 1 && report.l == 1) {
        j["paper_exponent"] = report.paper_exponent;
        j["derived_exponent"] = report.derived_exponent;
        j["small_epsilon_exponent"] = report.small_eps_exponent;
        j["factor_two"] = report.factor_two;
    } else {
        j["paper_exponent"] = nullptr;
        j["derived_exponent"] = nullptr;
    }
    j["match"] = to_string(report.match);
    return j;
}

std::string phase_report_json(const PhaseReport& report) { return phase_report_to_json(report).dump(2); }

}  // namespace dasub
