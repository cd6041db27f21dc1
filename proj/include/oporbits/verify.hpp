#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oporbits::verify {

enum class Suite { Symbolic, Numeric };

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

/// Runs the acceptance criteria (all, or one suite), printing one pass/fail
/// line per criterion. Returns true iff everything passed.
bool run_acceptance(std::ostream& out, bool symbolic, bool numeric);

std::vector<CriterionResult> run_criteria(bool symbolic, bool numeric);

}  // namespace oporbits::verify
