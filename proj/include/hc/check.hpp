#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hc {

struct CheckConfig {
    std::uint64_t seed = 7;
    int instances = 1000;
    int max_dim = 6;
    int max_length = 4;
};

struct CheckResult {
    std::string name;
    long cases = 0;
    long failures = 0;
    std::string first_failure;   // empty when everything passed
};

struct CheckSuite {
    CheckConfig config;
    std::vector<CheckResult> results;
    bool ok() const;
    const CheckResult& get(const std::string& name) const;
};

/// Random-instance properties (seeded) followed by the fixed geometric cases,
/// each compared with an independent reference computation.
CheckSuite run_checks(const CheckConfig& config);

}  // namespace hc
