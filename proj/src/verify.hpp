#pragma once

#include <string>
#include <vector>

namespace riordan {

struct PropertyResult {
    std::string name;
    std::string range;
    bool pass = true;
    std::string counterexample;  // JSON payload, empty when passing
};

struct VerificationReport {
    std::string suite;
    int max_n = 0;
    std::vector<PropertyResult> properties;  // sorted by name
    double duration_ms = 0.0;

    bool passed() const;
    // Deterministic; intentionally excludes the wall-clock duration so that
    // identical invocations print byte-identical reports.
    std::string json() const;
};

const std::vector<std::string>& verification_suites();

// Runs the named suite ("counts", "trees", "dyck", "patterns", "phi", "psi"
// or "all") with sweeps up to max_n, capped per property at the range the
// invariant is stated for.
VerificationReport run_verification(const std::string& suite, int max_n);

}  // namespace riordan
