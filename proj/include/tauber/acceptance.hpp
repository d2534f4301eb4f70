#pragma once

#include <string>
#include <vector>

namespace tauber {

// One end-to-end correctness gate.  The acceptance binary prints one line
// per criterion; the CLI exposes the same list under `corpus run --gate`.
struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

std::vector<CriterionResult> run_acceptance();

}  // namespace tauber
