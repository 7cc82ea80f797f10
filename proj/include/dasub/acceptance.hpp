#pragma once

#include <string>
#include <vector>

namespace dasub {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

inline constexpr int kCriterionCount = 16;

/// Runs one acceptance criterion (1..16) at its pinned tolerances.
CriterionResult run_criterion(int id);

std::vector<CriterionResult> run_all();

/// One line per criterion. Timings are left out unless asked for so the
/// report of a fixed build is reproducible byte for byte.
std::string render_report(const std::vector<CriterionResult>& results, bool with_timing = false);

}  // namespace dasub
