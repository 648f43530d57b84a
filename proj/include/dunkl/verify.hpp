// The acceptance battery: one entry per verification criterion, shared by
// the CLI `verify-all` subcommand and the acceptance test suite.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dunkl::verify {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double metric = 0;     // worst observed value
    double threshold = 0;  // pinned bound the metric is held to
    std::string detail;
};

struct VerifyReport {
    std::uint64_t seed = 0;
    std::vector<CriterionResult> results;
    bool all_pass() const;
};

VerifyReport run_acceptance(std::uint64_t seed);

}  // namespace dunkl::verify
