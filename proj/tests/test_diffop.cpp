#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "p13/diffop.hpp"
#include "p13/matrix.hpp"

using namespace p13;

namespace {
const ScalarExpr i = ScalarExpr::imag_unit();
const ScalarExpr p1 = ScalarExpr::p(1);
const ScalarExpr p2 = ScalarExpr::p(2);
const ScalarExpr e = ScalarExpr::energy();
[[nodiscard]] ScalarExpr q(long n, long d = 1) { return ScalarExpr::rational(n, d); }
}  // namespace

TEST_CASE("canonical pairing [x_k, p_l] = i delta_kl") {
    for (int k = 1; k <= 3; ++k) {
        for (int l = 1; l <= 3; ++l) {
            const DiffOp lhs =
                commutator(DiffOp::x(k, 2), DiffOp::scalar_op(2, ScalarExpr::p(l)));
            const DiffOp rhs = k == l ? DiffOp::scalar_op(2, i) : DiffOp(2);
            CHECK((lhs - rhs).is_zero());
        }
    }
}

TEST_CASE("x acts as i d/dp on dressed coefficients") {
    const DiffOp lhs = commutator(DiffOp::x(1, 2), DiffOp::scalar_op(2, e));
    CHECK((lhs - DiffOp::scalar_op(2, i * p1 / e)).is_zero());
}

TEST_CASE("normal ordering keeps x on the right") {
    const DiffOp op = DiffOp::scalar_op(2, p1) * DiffOp::x(1, 2);
    const DiffOp swapped = DiffOp::x(1, 2) * DiffOp::scalar_op(2, p1);
    CHECK(op.x_degree() == 1);
    CHECK(!(op - swapped).is_zero());
    CHECK((swapped - op - DiffOp::scalar_op(2, i)).is_zero());
}

TEST_CASE("x components commute") {
    CHECK(commutator(DiffOp::x(1, 2), DiffOp::x(2, 2)).is_zero());
    const DiffOp xy = DiffOp::x(1, 2) * DiffOp::x(2, 2);
    CHECK(xy.x_degree() == 2);
}

TEST_CASE("adjoint reverses products") {
    const DiffOp a = DiffOp(i * sigma(2)) + DiffOp::x(1, 2);
    const DiffOp b = DiffOp::scalar_op(2, e) * DiffOp::x(3, 2);
    CHECK(((a * b).adjoint() - b.adjoint() * a.adjoint()).is_zero());
    CHECK((a.adjoint().adjoint() - a).is_zero());
}

TEST_CASE("matrix embedding is a ring homomorphism") {
    const MatrixOp m1 = sigma(1);
    const MatrixOp m2 = p2 * sigma(3);
    CHECK((DiffOp(m1) * DiffOp(m2) - DiffOp(m1 * m2)).is_zero());
    CHECK((DiffOp(m1) + DiffOp(m2) - DiffOp(m1 + m2)).is_zero());
}

TEST_CASE("anticommutator helper") {
    const DiffOp l = anticommutator(DiffOp(sigma(1)), DiffOp(sigma(1)));
    CHECK((l - DiffOp::scalar_op(2, q(2))).is_zero());
    CHECK(anticommutator(DiffOp(sigma(1)), DiffOp(sigma(2))).is_zero());
}

TEST_CASE("endomorphisms flip x with momentum and conjugation") {
    // Under p -> -p the operator i d/dp flips sign as well.
    const EndoSpec rho1 = EndoSpec::rho(1);
    CHECK((DiffOp::x(1, 2).apply_endo(rho1) + DiffOp::x(1, 2)).is_zero());
    CHECK((DiffOp::x(2, 2).apply_endo(rho1) - DiffOp::x(2, 2)).is_zero());
    const EndoSpec star = EndoSpec::star();
    CHECK((DiffOp::x(3, 2).apply_endo(star) - DiffOp::x(3, 2)).is_zero());
}
