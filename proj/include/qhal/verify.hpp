#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhal/report.hpp"

namespace qhal {

/// Resolved run configuration shared by the CLI and the verification driver.
/// `tolerance`, when present, replaces the per-check default thresholds (it
/// also replaces lower-bound thresholds such as the semisimplicity floor).
struct RunConfig {
    int32_t n = 1;
    int64_t N = 9;
    uint64_t seed = 42;
    std::optional<double> tolerance;
    std::vector<std::string> suites;  ///< empty selects every suite
    std::string in_path;
    std::string out_path;

    /// Throws std::invalid_argument on bad parameters (even modulus, n < 1,
    /// nonpositive tolerance, unknown suite name).
    void validate() const;
};

/// The verification suites, in execution order.
const std::vector<std::string>& suite_names();

bool is_suite_name(const std::string& name);

/// Runs one suite; throws std::invalid_argument for an unknown name (the
/// message lists the valid ones).
VerificationReport run_suite(const std::string& name, const RunConfig& cfg);

/// Runs the selected suites (all when the filter is empty).
std::vector<VerificationReport> run_verify(const RunConfig& cfg);

/// True when every applicable check of every report passed.
bool all_passed(const std::vector<VerificationReport>& reports);

}  // namespace qhal
