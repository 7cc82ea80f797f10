#include <doctest.h>

#include "dasub/io.hpp"

using namespace dasub;

TEST_CASE("csv layout") {
    Table t{{"a", "b", "c"}, {}};
    t.add({1LL, 0.1, std::string("x,y")});
    CHECK(to_csv(t) == "a,b,c\n1,0.10000000000000001,\"x,y\"\n");
    CHECK_THROWS(t.add({1LL}));
}

TEST_CASE("json rows keep column order and null empties") {
    Table t{{"z", "a"}, {}};
    t.add({2LL, std::string()});
    CHECK(to_json(t).dump() == R"([{"z":2,"a":null}])");
}

TEST_CASE("transport table schema") {
    const Table t = transport_table(1, 0.5, 3);
    CHECK(t.columns == std::vector<std::string>{"k", "epsilon", "r", "n", "f", "delta_r", "delta_n", "asymptote", "gap"});
    CHECK(to_csv(t).find("1,0.5,0,0,0.33333333333333331,") != std::string::npos);
    const Table z = transport_table(2, 0.0, 2);
    CHECK(std::get<std::string>(z.rows[0][7]).empty());
}

TEST_CASE("frame json schema") {
    TruncationSpec tr;
    tr.q_max = 2;
    const auto j = frame_json(beta(1, 0.5, 0.0, {0, 0}, tr));
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"k", "epsilon", "t", "r", "n", "kind", "q_max", "coeffs", "tail_bound"});
    CHECK(j["coeffs"].size() == 3);
    CHECK(j["kind"] == "beta");
}

TEST_CASE("phase report json") {
    const auto j = phase_report_to_json(phase_report(1, 1, 0.3, 2));
    CHECK(j["match"] == "derived");
    CHECK(j["per_step_differences"]["m_direction"].size() == 2);
    CHECK(phase_report_json(phase_report(1, 1, 0.3, 2)) == phase_report_json(phase_report(1, 1, 0.3, 2)));
}
