#pragma once

#include <string>
#include <vector>

namespace jkres {

struct CriterionResult {
    int number = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

// Runs the acceptance checks.  quick restricts to the fast subset {1, 2, 5}.
std::vector<CriterionResult> run_selftest(bool quick = false);

} // namespace jkres
