// Acceptance gate: runs the full closed-form-vs-numeric battery and prints
// one pass/fail line per check. Exit code 0 iff everything passed.
#include <cstdio>
#include <iostream>

#include "entcast/verification.hpp"

int main() {
    const auto results = entcast::run_verification();
    std::cout << entcast::format_results(results);
    const bool ok = entcast::all_passed(results);
    int passed = 0;
    for (const auto& r : results) passed += r.passed;
    std::printf("%d/%zu checks passed\n", passed, results.size());
    return ok ? 0 : 1;
}
