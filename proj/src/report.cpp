#include "p13/report.hpp"

#include "p13/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace p13 {

namespace {

constexpr std::array<const char*, 6> kStatusNames = {"holds",  "fails",         "obstructed",
                                                     "exists", "presumed_typo", "inconsistent"};

void append_json_string(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
}

void sort_results(std::vector<CheckedResult>& results) {
    std::sort(results.begin(), results.end(), [](const CheckedResult& a, const CheckedResult& b) {
        return a.report.check_id < b.report.check_id;
    });
}

}  // namespace

const char* status_name(Status s) { return kStatusNames[static_cast<std::size_t>(s)]; }

std::optional<Status> status_from(const std::string& name) {
    for (std::size_t i = 0; i < kStatusNames.size(); ++i)
        if (name == kStatusNames[i]) return static_cast<Status>(i);
    return std::nullopt;
}

std::string to_json_line(const CheckReport& r) {
    std::string out = "{\"check_id\":";
    append_json_string(out, r.check_id);
    out += ",\"paper_ref\":";
    append_json_string(out, r.paper_ref);
    out += ",\"status\":";
    append_json_string(out, status_name(r.status));
    out += ",\"witness\":";
    append_json_string(out, r.witness);
    out += ",\"residual\":";
    if (r.residual) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", *r.residual);
        out += buf;
    } else {
        out += "null";
    }
    out += ",\"duration_ms\":";
    out += std::to_string(r.duration_ms);
    out += "}";
    return out;
}

CheckReport from_json_line(const std::string& line) {
    const nlohmann::json j = nlohmann::json::parse(line);
    CheckReport r;
    r.check_id = j.at("check_id").get<std::string>();
    r.paper_ref = j.at("paper_ref").get<std::string>();
    const auto st = status_from(j.at("status").get<std::string>());
    if (!st) throw Error("unknown status in report line");
    r.status = *st;
    r.witness = j.at("witness").get<std::string>();
    if (!j.at("residual").is_null()) r.residual = j.at("residual").get<double>();
    r.duration_ms = j.at("duration_ms").get<long>();
    return r;
}

std::string emit_json(std::vector<CheckedResult> results) {
    sort_results(results);
    std::string out;
    for (const CheckedResult& c : results) {
        out += to_json_line(c.report);
        out += '\n';
    }
    return out;
}

std::string emit_text(std::vector<CheckedResult> results) {
    sort_results(results);
    std::size_t wid = 8, wref = 9, wst = 6;
    for (const CheckedResult& c : results) {
        wid = std::max(wid, c.report.check_id.size());
        wref = std::max(wref, c.report.paper_ref.size());
        wst = std::max(wst, std::string(status_name(c.report.status)).size());
    }
    std::ostringstream os;
    std::size_t pass = 0;
    for (const CheckedResult& c : results) {
        const CheckReport& r = c.report;
        os << (c.ok() ? "  ok  " : " BAD  ");
        os << r.check_id << std::string(wid - r.check_id.size() + 2, ' ');
        os << status_name(r.status)
           << std::string(wst - std::string(status_name(r.status)).size() + 2, ' ');
        os << r.paper_ref << std::string(wref - r.paper_ref.size() + 2, ' ');
        if (r.residual) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.3g", *r.residual);
            os << buf;
        }
        if (!c.ok()) os << "  expected " << status_name(c.expected);
        if (!r.witness.empty()) {
            std::string w = r.witness;
            if (w.size() > 72) w = w.substr(0, 69) + "...";
            os << "  " << w;
        }
        os << '\n';
        pass += c.ok() ? 1 : 0;
    }
    os << (pass == results.size() ? "PASS " : "FAIL ") << pass << "/" << results.size() << '\n';
    return os.str();
}

Manifest load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open manifest " + path);
    Manifest m;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\r' || line.back() == '\t'))
            line.pop_back();
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string set_label, kind, verdict;
        if (!std::getline(ls, set_label, '\t') || !std::getline(ls, kind, '\t') ||
            !std::getline(ls, verdict))
            throw Error("manifest parse error at line " + std::to_string(lineno));
        const auto st = status_from(verdict);
        if (!st) throw Error("manifest verdict unknown at line " + std::to_string(lineno));
        if (!m.emplace(std::make_pair(set_label, kind), *st).second)
            throw Error("manifest duplicate entry at line " + std::to_string(lineno));
    }
    return m;
}

}  // namespace p13
