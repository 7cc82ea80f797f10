// Acceptance suite: one PASS/FAIL line per criterion.
//   acceptance              run every criterion
//   acceptance --criterion N

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "dasub/acceptance.hpp"

int main(int argc, char** argv) {
    std::vector<dasub::CriterionResult> results;
    if (argc == 3 && std::string(argv[1]) == "--criterion") {
        results.push_back(dasub::run_criterion(std::atoi(argv[2])));
    } else if (argc == 1) {
        results = dasub::run_all();
    } else {
        std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
        return 2;
    }
    std::fputs(dasub::render_report(results, true).c_str(), stdout);
    for (const auto& r : results)
        if (!r.pass) return 1;
    return 0;
}
