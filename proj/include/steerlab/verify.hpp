#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace steerlab {

struct CheckResult {
    std::string group;  // cross, bounds, envelope, optimum, optimum-alpha,
                        // negative, weak, properties
    std::string name;
    double expected = 0.0;
    double computed = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct VerifyOptions {
    std::string only;             // run a single group when non-empty
    bool inject_fault = false;    // corrupt one unitary so a check must fail
};

std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

// One aligned line per check plus a tail summary; returns pass count.
int print_verification(std::ostream& os, const std::vector<CheckResult>& results);

}  // namespace steerlab
