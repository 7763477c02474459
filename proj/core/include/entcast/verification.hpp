#pragma once

#include <string>
#include <vector>

namespace entcast {

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
    double millis;
};

/// The closed-form-vs-numeric battery behind the `verify` CLI subcommand and
/// the acceptance suite. Every check is deterministic (fixed seeds).
std::vector<CheckResult> run_verification();

bool all_passed(const std::vector<CheckResult>& results);

/// "[PASS] name (1.2 ms) detail" per line.
std::string format_results(const std::vector<CheckResult>& results);

}  // namespace entcast
