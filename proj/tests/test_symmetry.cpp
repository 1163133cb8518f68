#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "p13/rep.hpp"
#include "p13/symmetry.hpp"

using namespace p13;

namespace {
const ScalarExpr i = ScalarExpr::imag_unit();
const ScalarExpr r = ScalarExpr::r_perp();
const ScalarExpr p1 = ScalarExpr::p(1);
const ScalarExpr p2 = ScalarExpr::p(2);
}  // namespace

TEST_CASE("seventeen named kinds in a fixed order") {
    const auto& names = kind_names();
    REQUIRE(names.size() == 17);
    CHECK(names.front() == "P1");
    CHECK(names[3] == "P");
    CHECK(names[4] == "T1");
    CHECK(names.back() == "PT2C");
    CHECK_THROWS_AS((void)kind_by_name("Q"), UnknownKindTwist);
}

TEST_CASE("kind composition tracks twist and linearity") {
    const Kind& c = kind_by_name("C");
    const Kind& p = kind_by_name("P1");
    CHECK(c.antilinear());
    CHECK(!p.antilinear());
    CHECK(kind_by_name("CP1").antilinear());
    CHECK(kind_by_name("T2C").antilinear() == !kind_by_name("T2").antilinear());
    const Kind composed = compose(p, kind_by_name("T1C"));
    CHECK(composed.name == "P1.T1C");
    CHECK(composed.antilinear() == (p.antilinear() != kind_by_name("T1C").antilinear()));
}

TEST_CASE("a printed wigner reversal candidate verifies") {
    const CandidateCheck cc = check_candidate(get_rep("w1"), kind_by_name("T1"), sigma(2));
    CHECK(cc.holds);
    CHECK(cc.unit_norm.is_one());
    for (const auto& res : cc.residuals) CHECK(res.is_zero());
}

TEST_CASE("a wrong candidate leaves residuals") {
    const CandidateCheck cc = check_candidate(get_rep("w1"), kind_by_name("T1"), sigma(3));
    CHECK(!cc.holds);
}

TEST_CASE("solver and obstruction partition each cell") {
    const Rep& phi1 = get_rep("phi1");
    CHECK(solve_candidates(phi1, kind_by_name("P1")).empty());
    const Obstruction ob = casimir_obstruction(phi1, kind_by_name("P1"));
    CHECK(ob.exists);
    CHECK(!ob.detail.empty());

    const auto cands = solve_candidates(phi1, kind_by_name("T1"));
    CHECK(!cands.empty());
    CHECK(!casimir_obstruction(phi1, kind_by_name("T1")).exists);
    for (const auto& c : cands) CHECK(check_candidate(phi1, kind_by_name("T1"), c.m).holds);
}

TEST_CASE("momentum-dressed candidates verify where printed") {
    const MatrixOp tau = ((p2 + i * p1) / r) * MatrixOp::identity(2);
    CHECK(check_candidate(get_rep("phi2p"), kind_by_name("T1"), tau).holds);
    CHECK(!check_candidate(get_rep("phi2"), kind_by_name("T1"), tau).holds);
}

TEST_CASE("conjugation survives on the second family only") {
    CHECK(!solve_candidates(get_rep("phi2"), kind_by_name("C")).empty());
    CHECK(solve_candidates(get_rep("phi1"), kind_by_name("C")).empty());
    CHECK(casimir_obstruction(get_rep("phi1"), kind_by_name("C")).exists);
    CHECK(solve_candidates(get_rep("phi3"), kind_by_name("C")).empty());
}

TEST_CASE("every kind exists on the four-component set") {
    const Rep& d = get_rep("dirac_b");
    for (const std::string& kn : kind_names()) {
        INFO(kn);
        CHECK(!solve_candidates(d, kind_by_name(kn)).empty());
    }
}

TEST_CASE("proportionality ignores scalar dressing") {
    CHECK(proportional(sigma(1), (p2 / r) * sigma(1)));
    CHECK(!proportional(sigma(1), sigma(2)));
}
