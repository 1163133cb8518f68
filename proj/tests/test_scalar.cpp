#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "p13/scalar.hpp"

using namespace p13;

namespace {
const ScalarExpr e = ScalarExpr::energy();
const ScalarExpr a = ScalarExpr::abs_p3();
const ScalarExpr r = ScalarExpr::r_perp();
const ScalarExpr p1 = ScalarExpr::p(1);
const ScalarExpr p2 = ScalarExpr::p(2);
const ScalarExpr p3 = ScalarExpr::p(3);
const ScalarExpr i = ScalarExpr::imag_unit();
[[nodiscard]] ScalarExpr q(long n, long d = 1) { return ScalarExpr::rational(n, d); }
}  // namespace

TEST_CASE("rational arithmetic is exact") {
    CHECK(q(1, 2) + q(1, 3) == q(5, 6));
    CHECK(q(2, 4) == q(1, 2));
    CHECK((q(1, 3) * q(3) - q(1)).is_zero());
    CHECK(i * i == q(-1));
    CHECK(i.conj() == q(-1) * i);
}

TEST_CASE("radicals satisfy their defining relations") {
    CHECK((e * e - (p1 * p1 + p2 * p2 + p3 * p3)).is_zero());
    CHECK((a * a - p3 * p3).is_zero());
    CHECK((r * r - (p1 * p1 + p2 * p2)).is_zero());
}

TEST_CASE("the helicity radical is not a polynomial in p3") {
    // a == |p3| only branchwise; a - p3 vanishes on one branch alone.
    CHECK(!(a - p3).is_zero());
    CHECK(!(a + p3).is_zero());
    CHECK(((a - p3) * (a + p3)).is_zero());
}

TEST_CASE("inverses and division") {
    CHECK((e * e.inverse()).is_one());
    const ScalarExpr w = (p1 + i * p2) / r;
    CHECK((w * w.conj()).is_one());
    CHECK_THROWS_AS((void)ScalarExpr().inverse(), DivisionByZero);
}

TEST_CASE("momentum reflections act on the radicals") {
    const EndoSpec rho3 = EndoSpec::rho(3);
    CHECK(p3.apply_endo(rho3) == q(-1) * p3);
    CHECK(p1.apply_endo(rho3) == p1);
    CHECK(e.apply_endo(rho3) == e);
    CHECK(a.apply_endo(rho3) == a);
    CHECK(r.apply_endo(rho3) == r);
    const EndoSpec star = EndoSpec::star();
    CHECK(i.apply_endo(star) == q(-1) * i);
    CHECK(p2.apply_endo(star) == q(-1) * p2);
}

TEST_CASE("evaluation agrees between exact and float routes") {
    // Pythagorean point keeps everything rational: E = 13, A = 12, R = 5.
    const ExactPoint xp{Rat(0), Rat(3), Rat(4), Rat(12), Rat(13), Rat(12), Rat(5)};
    const NumPoint np{0.0, 3.0, 4.0, 12.0, 13.0, 12.0, 5.0};
    const ScalarExpr s = (p1 * p2 + i * e * a) / (r * r);
    const GaussQ ex = s.eval_exact(xp);
    const auto fl = s.eval_num(np);
    CHECK(ex.re == Rat(12, 25));
    CHECK(ex.im == Rat(156, 25));
    CHECK(fl.real() == doctest::Approx(12.0 / 25.0));
    CHECK(fl.imag() == doctest::Approx(156.0 / 25.0));
}

TEST_CASE("differentiation respects the dispersion constraint") {
    CHECK(differentiate(e, P1) == p1 / e);
    CHECK(differentiate(a, P3) == p3 / a);
    CHECK(differentiate(r, P2) == p2 / r);
    CHECK(differentiate(e.inverse(), P1) == q(-1) * p1 / (e * e * e));
    CHECK(differentiate(p1 * p2, P1) == p2);
}

TEST_CASE("degree guard rejects runaway expressions") {
    const int saved = limits::max_scalar_degree;
    limits::max_scalar_degree = 8;
    ScalarExpr s = p1 + e;
    CHECK_THROWS_AS(
        [&] {
            for (int k = 0; k < 10; ++k) s = s * s;
            return s;
        }(),
        DegreeOverflow);
    limits::max_scalar_degree = saved;
}
