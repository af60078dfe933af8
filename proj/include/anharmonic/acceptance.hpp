#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace anharmonic {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

// Runs every acceptance criterion; each one is independent of the others.
std::vector<CriterionResult> run_acceptance();

// One line per criterion; returns true when all passed.
bool report_acceptance(std::ostream& out, const std::vector<CriterionResult>& results);

} // namespace anharmonic
