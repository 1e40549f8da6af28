#pragma once

#include <string>
#include <vector>

namespace zg {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Runs the built-in reference checks (golden polynomials, matrices,
// permutations, covering verdicts). filter selects checks whose name contains
// it; empty runs everything.
std::vector<CheckResult> run_reference_checks(const std::string& filter = "");

}  // namespace zg
