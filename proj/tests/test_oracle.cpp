#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "p13/dirac.hpp"
#include "p13/oracle.hpp"
#include "p13/rep.hpp"
#include "p13/symmetry.hpp"
#include "p13/unitary.hpp"

#include <complex>
#include <vector>

using namespace p13;

namespace {
const ScalarExpr a = ScalarExpr::abs_p3();
const ScalarExpr p1 = ScalarExpr::p(1);
const ScalarExpr p2 = ScalarExpr::p(2);
const ScalarExpr p3 = ScalarExpr::p(3);
[[nodiscard]] ScalarExpr q(long n, long d = 1) { return ScalarExpr::rational(n, d); }
}  // namespace

TEST_CASE("sample streams are deterministic and independent") {
    SamplePlan plan;
    const auto pts1 = sample_points(plan, "alpha");
    const auto pts2 = sample_points(plan, "alpha");
    const auto pts3 = sample_points(plan, "beta");
    // One copy of the plan per helicity branch: a = +|p3| then a = -|p3|.
    REQUIRE(pts1.size() == 2 * static_cast<std::size_t>(plan.count));
    CHECK(pts1[0].p1 == pts2[0].p1);
    CHECK(pts1[5].p3 == pts2[5].p3);
    CHECK(pts1[0].p1 != pts3[0].p1);
    CHECK(pts1.front().a > 0);
    CHECK(pts1.back().a < 0);
    for (const auto& pt : pts1) {
        CHECK(pt.e > 0);
        CHECK(std::abs(pt.a) >= plan.p3_floor * 0.99);
        CHECK(pt.r >= plan.p3_floor * 0.99);
        CHECK(std::abs(pt.a) == doctest::Approx(std::abs(pt.p3)));
        CHECK(pt.e * pt.e ==
              doctest::Approx(pt.p1 * pt.p1 + pt.p2 * pt.p2 + pt.p3 * pt.p3));
    }
    SamplePlan other = plan;
    other.seed = 2;
    const auto pts4 = sample_points(other, "alpha");
    CHECK(pts1[0].p1 != pts4[0].p1);
}

TEST_CASE("both helicity branches are sampled") {
    // a - p3 vanishes on one branch only; the float oracle must catch it.
    SamplePlan plan;
    const NumericVerdict v = numeric_zero(DiffOp::scalar_op(1, a - p3), plan, "branch");
    CHECK(!v.zero);
    CHECK(v.worst > 0.01);
    const NumericVerdict both =
        numeric_zero(DiffOp::scalar_op(1, (a - p3) * (a + p3)), plan, "branch2");
    CHECK(both.zero);
}

TEST_CASE("numeric_equal compares without cancellation") {
    SamplePlan plan;
    const DiffOp lhs = DiffOp::scalar_op(2, p1 * p2) * DiffOp::x(1, 2);
    const DiffOp rhs = DiffOp::scalar_op(2, p2) * DiffOp::scalar_op(2, p1) * DiffOp::x(1, 2);
    CHECK(numeric_equal(lhs, rhs, plan, "eq").zero);
    const DiffOp wrong = rhs + DiffOp::scalar_op(2, q(1, 1000000));
    CHECK(!numeric_equal(lhs, wrong, plan, "eq2").zero);
}

TEST_CASE("plane-wave kernels have the right dimension") {
    // Dressed two-component hamiltonian at p = (3,4,12): eigenvalues +-13.
    const MatrixOp h = p1 * sigma(1) + p2 * sigma(2) + a * sigma(3);
    const NumPoint pt{0.0, 3.0, 4.0, 12.0, 13.0, 12.0, 5.0};
    const MatrixOp id = MatrixOp::identity(2);

    const auto on_shell = plane_wave_kernel((h - q(13) * id).eval_num(pt), 2, 1e-9);
    CHECK(on_shell.dim == 1);

    const auto off_shell = plane_wave_kernel((h - q(5) * id).eval_num(pt), 2, 1e-9);
    CHECK(off_shell.dim == 0);

    // At p = (0,0,1) the hamiltonian is sigma3; the positive kernel is (1,0).
    const NumPoint axis{0.0, 0.0, 0.0, 1.0, 1.0, 1.0, 0.0};
    const auto up = plane_wave_kernel((h - q(1) * id).eval_num(axis), 2, 1e-9);
    REQUIRE(up.dim == 1);
    CHECK(std::abs(up.basis[0][0]) == doctest::Approx(1.0));
    CHECK(std::abs(up.basis[0][1]) == doctest::Approx(0.0));
}

TEST_CASE("relation oracle agrees with the exact checker") {
    SamplePlan plan;
    const Rep& w1 = get_rep("w1");
    const Kind& t1 = kind_by_name("T1");
    CHECK(check_candidate(w1, t1, sigma(2)).holds);
    CHECK(numeric_relation(w1, t1, sigma(2), plan, "rel").zero);
    CHECK(!check_candidate(w1, t1, sigma(3)).holds);
    CHECK(!numeric_relation(w1, t1, sigma(3), plan, "rel2").zero);
}

TEST_CASE("unitarity probe matches the exact certificate") {
    SamplePlan plan;
    for (const ScaledUnitary& v : {kernel_v1(), kernel_v(), kernel_u('a'), kernel_weyl('b')}) {
        CHECK_NOTHROW(v.certify());
        CHECK(unitary_probe(v, plan, v.name).zero);
    }
}

TEST_CASE("weyl alignment probe passes in both bases") {
    SamplePlan plan;
    CHECK(weyl_block_probe('a', plan).zero);
    CHECK(weyl_block_probe('b', plan).zero);
}

TEST_CASE("master equation probe solves the subsidiary condition") {
    SamplePlan plan;
    plan.count = 10;
    for (char b : {'a', 'b'})
        for (int k = 1; k <= 3; ++k)
            for (double kappa : {0.5, 1.0, 3.0}) {
                const MasterVerdict mv = master_equation_probe(b, k, kappa, plan);
                INFO(b, " k=", k, " kappa=", kappa, " ", mv.detail);
                CHECK(mv.pass);
                CHECK(mv.worst <= plan.tol);
            }
}
