#pragma once

#include <string>
#include <vector>

namespace loewner::acceptance {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    std::string detail; // measured defects / verdicts behind the decision
};

// Runs the full verification suite (11 criteria); each result is independent
// and failures do not interrupt the remaining criteria.
std::vector<CriterionResult> run_all();

} // namespace loewner::acceptance
