#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace p13 {

// ============================================================================
// Check reports, serialization, expected-verdict manifest
// ============================================================================

enum class Status { Holds, Fails, Obstructed, Exists, PresumedTypo, Inconsistent };

[[nodiscard]] const char* status_name(Status s);
[[nodiscard]] std::optional<Status> status_from(const std::string& name);

struct CheckReport {
    std::string check_id;
    std::string paper_ref;
    Status status = Status::Holds;
    std::string witness;  // empty means absent
    std::optional<double> residual;
    long duration_ms = 0;

    friend bool operator==(const CheckReport& a, const CheckReport& b) {
        return a.check_id == b.check_id && a.paper_ref == b.paper_ref && a.status == b.status &&
               a.witness == b.witness && a.residual == b.residual &&
               a.duration_ms == b.duration_ms;
    }
};

// A report paired with the verdict the run is expected to produce; the exit
// status of a run is the conjunction of these matches.
struct CheckedResult {
    CheckReport report;
    Status expected = Status::Holds;

    [[nodiscard]] bool ok() const { return report.status == expected; }
};

// One object per line, keys in fixed order:
// check_id, paper_ref, status, witness, residual, duration_ms.
// Emitting is canonical, so parse + re-emit is byte-identical.
[[nodiscard]] std::string to_json_line(const CheckReport& r);
[[nodiscard]] CheckReport from_json_line(const std::string& line);

// Both emitters sort by check_id; the text table ends with "PASS n/m" or
// "FAIL n/m" where n counts expected verdicts.
[[nodiscard]] std::string emit_json(std::vector<CheckedResult> results);
[[nodiscard]] std::string emit_text(std::vector<CheckedResult> results);

// `set_label <TAB> kind <TAB> verdict` lines, # comments; verdicts use the
// status vocabulary (exists / obstructed).
using Manifest = std::map<std::pair<std::string, std::string>, Status>;
[[nodiscard]] Manifest load_manifest(const std::string& path);

}  // namespace p13
