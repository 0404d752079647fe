#pragma once

// Named verification suites assembling all checks, run with seeded
// determinism. Exit-code semantics and the JSON schema live with the CLI.

#include <cstdint>
#include <string>
#include <vector>

#include "exc/report.hpp"

namespace exc {

struct SuiteConfig {
    std::uint64_t seed = 42;
    std::size_t samples = 50;
    double tol = 1e-9;
    std::string backend = "auto";  // exact | float | auto
    std::size_t jobs = 1;
};

const std::vector<std::string>& suite_names();  // includes "all"
bool is_suite(const std::string& name);

// the check ids a suite would run, without running them
std::vector<std::string> suite_check_ids(const std::string& name);

// throws std::invalid_argument on an unknown suite name
SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg);

}  // namespace exc
