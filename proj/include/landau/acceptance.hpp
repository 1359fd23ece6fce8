#ifndef LANDAU_ACCEPTANCE_HPP
#define LANDAU_ACCEPTANCE_HPP

#include <string>
#include <utility>
#include <vector>

namespace landau::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    double elapsed_seconds = 0.0; // console only, never serialized
    double budget_seconds = 0.0;
    std::vector<std::pair<std::string, double>> metrics;
    std::string note;
};

struct SuiteResult {
    std::vector<CriterionResult> criteria;
    bool all_passed = false;
    std::string report_json; // deterministic: no timings, 17-digit numbers
};

// Runs the full verification suite. The determinism criterion re-runs the
// numeric criteria and compares the two serialized reports byte for byte.
SuiteResult run_suite();

// One console line per criterion: PASS/FAIL, id, name, key metric, time.
std::string console_line(const CriterionResult& c);

} // namespace landau::acceptance

#endif
