#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace epdiff {
namespace verify {

struct CheckResult {
    std::string name;
    double measured; ///< measured error (or deviation) for the check
    double tolerance;
    bool pass;
    std::string note; ///< extra reported values, e.g. fitted constants
};

CheckResult check(std::string name, double measured, double tolerance, std::string note = "");

// Suites behind `epdiff verify <name>`. Each runs at fixed resolutions and
// returns one result per check.
std::vector<CheckResult> suite_operators();
std::vector<CheckResult> suite_greens();
std::vector<CheckResult> suite_identities();
std::vector<CheckResult> suite_conservation();

/// Prints one line per check; returns 0 iff all pass. Unknown suite names
/// throw std::invalid_argument.
int run_suite(const std::string& name, std::ostream& out);

void print_results(const std::vector<CheckResult>& results, std::ostream& out);

} // namespace verify
} // namespace epdiff
