#pragma once

#include <string>
#include <vector>

namespace stammerlab {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string details;  // counts on success, counterexample payload on failure
};

struct VerifyReport {
    std::string suite;
    int max_n = 0;
    std::vector<CheckResult> checks;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

std::vector<std::string> suite_names();  // roundtrips, counts, constructions, lattice, ansatz, all

// Runs one invariant suite with exhaustive enumeration up to max_n (the
// randomized spot checks built into some suites use fixed seeds and sizes).
// Throws std::invalid_argument on an unknown suite name.
VerifyReport run_suite(const std::string& suite, int max_n);

}  // namespace stammerlab
