#pragma once

#include "p13/oracle.hpp"
#include "p13/report.hpp"

#include <string>
#include <vector>

namespace p13 {

// ============================================================================
// Check suites
// ============================================================================

struct SuiteConfig {
    std::string suite = "all";
    std::vector<std::string> reps;  // empty selects every rep
    SamplePlan plan;
    int max_degree = 64;
    std::string manifest_path = "data/expected_classification.tsv";
};

[[nodiscard]] const std::vector<std::string>& suite_names();

// Runs the selected suite and returns one CheckedResult per check, sorted by
// check_id. Throws Error subclasses on configuration problems (unknown suite
// or rep id, unreadable manifest) before any check is emitted.
[[nodiscard]] std::vector<CheckedResult> run_suite(const SuiteConfig& cfg);

// 0 when every report matches its expected verdict, 1 on any mismatch, 2 when
// any check is internally inconsistent (the symbolic and numeric legs of a
// zero test disagree, or a solver result contradicts its obstruction).
[[nodiscard]] int exit_code(const std::vector<CheckedResult>& results);

}  // namespace p13
