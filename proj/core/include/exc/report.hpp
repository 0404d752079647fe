#pragma once

// Check results, suite reports and all JSON / markdown serialization,
// including the operator / subalgebra / word export formats.

#include <cstdint>
#include <string>
#include <vector>

#include "exc/lie.hpp"
#include "exc/matrix.hpp"
#include "exc/orbits.hpp"

namespace exc {

inline constexpr const char* kVersion = "1.0.0";

struct CheckResult {
    std::string id;
    std::string description;
    std::string paper_ref;
    std::string status;  // pass | fail | skip
    std::string measured;
    std::string expected;
    double tolerance = 0.0;
    std::int64_t runtime_ms = 0;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::string backend;
    std::string calibration;
    std::vector<CheckResult> checks;
    std::string status;  // pass | fail
    std::string version = kVersion;

    bool pass() const { return status == "pass"; }
};

std::string report_json(const SuiteReport& r, bool include_runtime = true);
std::string report_markdown(const SuiteReport& r);

// linear-engine serialization: row-major entries, backend tag, dimension,
// basis-order label; exact entries as "num/den" decimal strings
std::string operator_json(const OpQ& op);
std::string operator_json(const OpD& op);
OpQ operator_q_from_json(const std::string& text);

// subalgebra export with the generating lemma id as metadata
std::string subalgebra_json(const SubalgebraBasis& b, const std::string& lemma_id);

// word export: ordered {generator tag, parameter} records
std::string word_json(const std::vector<WordStep>& word);

}  // namespace exc
