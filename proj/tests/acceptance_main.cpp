// Acceptance gate: one line per criterion, nonzero exit on any failure.
// Tolerances are pinned here and must not drift.

#include "p13/report.hpp"
#include "p13/suite.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

using namespace p13;

namespace {

constexpr double kTol = 1e-9;
constexpr int kPoints = 20;

int g_failures = 0;

void line(int n, bool pass, const std::string& desc) {
    std::printf("%s criterion-%d %s\n", pass ? "PASS" : "FAIL", n, desc.c_str());
    if (!pass) ++g_failures;
}

[[nodiscard]] std::vector<const CheckedResult*> section(const std::vector<CheckedResult>& all,
                                                        const std::string& prefix) {
    std::vector<const CheckedResult*> out;
    for (const auto& r : all)
        if (r.report.check_id.rfind(prefix, 0) == 0) out.push_back(&r);
    return out;
}

[[nodiscard]] bool all_ok(const std::vector<const CheckedResult*>& rs) {
    if (rs.empty()) return false;
    for (const auto* r : rs)
        if (!r->ok()) return false;
    return true;
}

[[nodiscard]] const CheckedResult* find(const std::vector<CheckedResult>& all,
                                        const std::string& cid) {
    for (const auto& r : all)
        if (r.report.check_id == cid) return &r;
    return nullptr;
}

[[nodiscard]] bool has_status(const std::vector<CheckedResult>& all, const std::string& cid,
                              Status st) {
    const CheckedResult* r = find(all, cid);
    return r && r->report.status == st && r->ok();
}

}  // namespace

int main() {
    SuiteConfig cfg;
    cfg.plan.seed = 1;
    cfg.plan.count = kPoints;
    cfg.plan.tol = kTol;
    if (const char* data = std::getenv("P13CERT_DATA"))
        cfg.manifest_path = std::string(data) + "/expected_classification.tsv";

    std::vector<CheckedResult> all;
    try {
        all = run_suite(cfg);
    } catch (const std::exception& err) {
        std::printf("FAIL criterion-0 suite run aborted: %s\n", err.what());
        return 1;
    }

    // 1: all fifteen sets close under the one convention table, exactly.
    {
        const auto rs = section(all, "poincare/");
        bool pass = rs.size() == 15 * 45 && all_ok(rs);
        for (const auto* r : rs) pass = pass && r->report.status == Status::Holds;
        line(1, pass, "15 sets x 45 brackets close against the shared structure table");
    }

    // 2: invariant pairs match the tabulated forms; occupancies match.
    {
        bool pass = all_ok(section(all, "casimir/")) && all_ok(section(all, "content/"));
        pass = pass && has_status(all, "casimir/eq-2.1", Status::PresumedTypo);
        line(2, pass, "invariant pairs and occupancies reproduce the tabulated values");
    }

    // 3: the three canonical two-component occupancies are pairwise distinct.
    line(3, has_status(all, "content/distinct", Status::Holds),
         "the three canonical sets have pairwise distinct occupancies");

    // 4: kernels are certified unitary and regenerate the dressed sets.
    line(4, all_ok(section(all, "transform/")),
         "scaled-unitary kernels certify and regenerate every dressed set");

    // 5: the printed operator catalog is fully classified; defects are
    // reproduced by the solver as corrected candidates.
    {
        bool pass = all_ok(section(all, "symmetry/eq-"));
        pass = pass && section(all, "symmetry/eq-").size() == 26;
        for (const char* cid : {"symmetry/eq-3.20/w2-v1", "symmetry/eq-3.20/w2-v2",
                                "symmetry/eq-3.21/w2", "symmetry/eq-3.22/w2"})
            pass = pass && has_status(all, cid, Status::PresumedTypo);
        for (const char* cid : {"symmetry/eq-3.5/phi1", "symmetry/eq-3.7/phi2",
                                "symmetry/eq-3.13/phi3", "symmetry/eq-3.17/w1",
                                "symmetry/eq-3.24/w3"})
            pass = pass && has_status(all, cid, Status::Holds);
        line(5, pass, "every printed discrete-symmetry formula is classified");
    }

    // 6: the derived classification equals the expected table, including the
    // stated conclusions and corollaries.
    {
        bool pass = all_ok(section(all, "classification/")) &&
                    all_ok(section(all, "symmetry/manifest/"));
        pass = pass && section(all, "classification/").size() >= 15 * 17;
        for (const char* cid :
             {"classification/conclusion-1", "classification/conclusion-2",
              "classification/conclusion-3", "classification/corollary-1",
              "classification/corollary-2"})
            pass = pass && has_status(all, cid, Status::Holds);
        pass = pass && has_status(all, "classification/corollary-3", Status::PresumedTypo);
        line(6, pass, "derived existence grid matches the expected classification");
    }

    // 7: every noninvariance is backed by a finite invariant-transport
    // obstruction, not just solver emptiness.
    {
        bool pass = true;
        int obstructed = 0;
        for (const auto& r : all) {
            if (r.report.check_id.rfind("classification/", 0) != 0) continue;
            if (r.report.status == Status::Obstructed) {
                ++obstructed;
                pass = pass && r.ok();
            }
        }
        pass = pass && obstructed == 141;
        for (const char* cid :
             {"classification/obstruction/phi1-p1", "classification/obstruction/phi1-p2",
              "classification/obstruction/phi1-p3", "classification/obstruction/phi1-c"})
            pass = pass && has_status(all, cid, Status::Holds);
        line(7, pass, "all 141 noninvariant cells carry a finite obstruction certificate");
    }

    // 8: projector algebra, covariance and relation sides in both bases.
    line(8, all_ok(section(all, "projectors/")),
         "projector families are idempotent, covariant and sort the sign relations");

    // 9: the four-component hamiltonian diagonalizes; chiral halves match the
    // two-component equation numerically at 20 points below 1e-9.
    line(9, all_ok(section(all, "equivalence/")) &&
             has_status(all, "equivalence/eq-2.10", Status::PresumedTypo),
         "diagonalization certificates hold symbolically and at every sample point");

    // 10: the subsidiary-condition equation has plane-wave solutions at three
    // couplings which satisfy the selected condition to 1e-9.
    {
        const auto rs = section(all, "master/");
        line(10, rs.size() == 18 && all_ok(rs),
             "subsidiary-condition equation verified for k=1..3, kappa in {1/2,1,3}");
    }

    // 11: determinism and oracle agreement across five seeds.
    {
        bool pass = true;
        for (const auto& r : all) pass = pass && r.report.status != Status::Inconsistent;
        try {
            const std::string first = emit_json(all);
            const std::string second = emit_json(run_suite(cfg));
            pass = pass && first == second && !first.empty();
            for (std::uint64_t seed = 2; seed <= 5; ++seed) {
                SuiteConfig c2 = cfg;
                c2.plan.seed = seed;
                for (const auto& r : run_suite(c2))
                    pass = pass && r.report.status != Status::Inconsistent;
            }
        } catch (const std::exception& err) {
            std::printf("# criterion-11 rerun aborted: %s\n", err.what());
            pass = false;
        }
        line(11, pass, "zero exact/float disagreements over seeds 1..5; reports byte-stable");
    }

    std::printf("%s %d/11\n", g_failures == 0 ? "ACCEPT" : "REJECT", 11 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
