#ifndef PSUMS_VERIFY_HPP
#define PSUMS_VERIFY_HPP

#include <string>
#include <vector>

namespace psums {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string counterexample;  // empty when passed
};

struct VerifyOptions {
    long kmax = 8;
    long lmax = 5;
    long nmax = 50;
};

// Sweeps every library identity over the requested parameter box and
// reports one result per named check, carrying the first counterexample on
// failure. A failure here means a mathematical identity broke, not bad
// input.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace psums

#endif
