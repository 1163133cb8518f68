#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "p13/rep.hpp"
#include "p13/unitary.hpp"

#include <algorithm>

using namespace p13;

namespace {
[[nodiscard]] ScalarExpr q(long n, long d = 1) { return ScalarExpr::rational(n, d); }
}  // namespace

TEST_CASE("the catalog knows fifteen sets") {
    const auto& ids = rep_ids();
    CHECK(ids.size() == 15);
    for (const char* id : {"phi1", "phi2p", "chi2", "w3", "scalar_minus", "dirac_b"})
        CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
    CHECK_THROWS_AS((void)get_rep("phi9"), UnknownRep);
}

TEST_CASE("every set closes under the single convention table") {
    for (const std::string& id : rep_ids()) {
        const auto res = closure_residuals(get_rep(id));
        CHECK(res.size() == 45);
        for (const auto& br : res) {
            INFO(id, " [", kGenNames[br.i], ",", kGenNames[br.j], "]");
            CHECK(br.residual.is_zero());
        }
    }
}

TEST_CASE("canonical invariant pairs") {
    const CasimirPair c1 = casimirs(get_rep("phi1"));
    CHECK(c1.lambda == q(1, 2) * sigma(3));
    CHECK(c1.epsilon == sigma(3));

    const CasimirPair c2 = casimirs(get_rep("phi2"));
    CHECK(c2.lambda == MatrixOp::scalar_mat(2, q(1, 2)));
    CHECK(c2.epsilon == sigma(3));

    const CasimirPair c3 = casimirs(get_rep("phi3"));
    CHECK(c3.lambda == q(1, 2) * sigma(3));
    CHECK(c3.epsilon == MatrixOp::identity(2));

    const CasimirPair cs = casimirs(get_rep("scalar_minus"));
    CHECK(cs.lambda == MatrixOp::scalar_mat(1, q(-1, 2)));
    CHECK(cs.epsilon == MatrixOp::identity(1));
}

TEST_CASE("content readout for constant pairs") {
    const auto lines = content(casimirs(get_rep("phi2")));
    REQUIRE(lines.size() == 2);
    CHECK(lines[0].eps == GaussQ(1));
    CHECK(lines[0].lam == q(1, 2).constant_value());
    CHECK(lines[0].mult == 1);
    CHECK(lines[1].eps == GaussQ(-1));
    CHECK(lines[1].lam == q(1, 2).constant_value());
    CHECK(content_str(lines).size() > 0);
}

TEST_CASE("primed sets share the momenta but are distinct operators") {
    const Rep& r = get_rep("phi1");
    const Rep& rp = get_rep("phi1p");
    for (int k = 1; k <= 3; ++k) {
        const DiffOp pk = DiffOp::scalar_op(2, ScalarExpr::p(k));
        CHECK((r.gen[k] - pk).is_zero());
        CHECK((rp.gen[k] - pk).is_zero());
    }
    CHECK(!reps_equal(r, rp));
}

TEST_CASE("kernel conjugation reproduces the dressed sets") {
    const Rep moved = transform_rep(get_rep("phi1"), kernel_v1(), false, "chi1-again");
    DiffOp worst;
    CHECK(reps_equal(moved, get_rep("chi1"), &worst));
    CHECK(worst.is_zero());

    const Rep wmoved = transform_rep(get_rep("phi1p"), kernel_v(), false, "w1-again");
    CHECK(reps_equal(wmoved, get_rep("w1")));
}

TEST_CASE("transform round trip is the identity") {
    const Rep there = transform_rep(get_rep("phi2"), kernel_v1(), false, "tmp");
    const Rep back = transform_rep(there, kernel_v1(), true, "phi2-back");
    CHECK(reps_equal(back, get_rep("phi2")));
}
