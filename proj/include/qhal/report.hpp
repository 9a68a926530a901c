#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qhal {

/// One line of a verification report.  status is "pass", "fail", or "n/a";
/// the last is reserved for checks that are genuinely void on a finite model
/// (continuity of a discrete group action, density of a finite-dimensional
/// subspace) and never counts toward failure, but is still listed so reports
/// say what was NOT checked rather than silently passing it.
struct CheckResult {
    std::string id;
    double value = 0.0;
    double tolerance = 0.0;
    std::string status;
    std::string note;
};

struct VerificationReport {
    std::string suite;
    int32_t n = 0;
    int64_t N = 0;
    uint64_t seed = 0;
    double wall_seconds = 0.0;
    std::vector<CheckResult> checks;

    bool passed() const {
        for (const auto& c : checks)
            if (c.status == "fail") return false;
        return true;
    }
};

}  // namespace qhal
