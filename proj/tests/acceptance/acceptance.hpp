#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace unipart::acceptance {

inline constexpr unsigned long kDefaultSeed = 20260815UL;

struct CriterionResult {
    int number = 0;
    std::string label;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

// Runs the nine gate criteria in order. A criterion that throws is reported
// as failed with the exception message as detail; run_all itself never
// throws. With a progress stream, each criterion's line is printed as soon
// as it finishes.
std::vector<CriterionResult> run_all(unsigned long seed = kDefaultSeed,
                                     std::ostream* progress = nullptr);

// One pass/fail line per criterion plus a summary line. Returns the number
// of failed criteria.
int report(const std::vector<CriterionResult>& results, std::ostream& out);

// Just the summary line; returns the number of failed criteria.
int summarize(const std::vector<CriterionResult>& results, std::ostream& out);

} // namespace unipart::acceptance
