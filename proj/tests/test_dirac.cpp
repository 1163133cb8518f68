#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "p13/dirac.hpp"
#include "p13/rep.hpp"

using namespace p13;

namespace {
const ScalarExpr e = ScalarExpr::energy();
[[nodiscard]] ScalarExpr q(long n, long d = 1) { return ScalarExpr::rational(n, d); }
}  // namespace

TEST_CASE("both gamma bases satisfy the clifford relations") {
    for (char b : {'a', 'b'}) {
        const GammaBasis& gb = gamma_basis(b);
        const MatrixOp id = MatrixOp::identity(4);
        for (int mu = 0; mu < 4; ++mu) {
            for (int nu = 0; nu < 4; ++nu) {
                const MatrixOp anti = gb.g[mu] * gb.g[nu] + gb.g[nu] * gb.g[mu];
                const int metric = mu == nu ? (mu == 0 ? 2 : -2) : 0;
                CHECK(anti == q(metric) * id);
            }
            CHECK((gb.g4 * gb.g[mu] + gb.g[mu] * gb.g4).is_zero());
        }
        CHECK(gb.g4 * gb.g4 == id);
        CHECK(gb.g4.adjoint() == gb.g4);
    }
}

TEST_CASE("the two bases differ in the diagonal of gamma0") {
    const MatrixOp& ga = gamma_basis('a').g[0];
    const MatrixOp& gbb = gamma_basis('b').g[0];
    CHECK(ga.at(0, 0).is_one());
    CHECK(ga.at(1, 1) == q(-1));
    CHECK(gbb.at(0, 0).is_one());
    CHECK(gbb.at(1, 1).is_one());
    CHECK(gbb.at(2, 2) == q(-1));
}

TEST_CASE("four-component generators close") {
    for (const char* id : {"dirac_a", "dirac_b"}) {
        for (const auto& br : closure_residuals(get_rep(id))) {
            INFO(id, " [", kGenNames[br.i], ",", kGenNames[br.j], "]");
            CHECK(br.residual.is_zero());
        }
    }
}

TEST_CASE("diagonalizing kernel certificate") {
    for (char b : {'a', 'b'}) {
        CHECK_NOTHROW(kernel_u(b).certify());
        CHECK_NOTHROW(kernel_weyl(b).certify());
    }
}

TEST_CASE("conjugated hamiltonian is gamma0 E") {
    for (char b : {'a', 'b'}) {
        const Rep& rep = get_rep(std::string("dirac_") + b);
        const DiffOp moved = kernel_u(b).conjugate(rep.gen[GP0], true);
        CHECK((moved - DiffOp(e * gamma_basis(b).g[0])).is_zero());
    }
}

TEST_CASE("projector families are complementary and hermitian") {
    for (char b : {'a', 'b'}) {
        for (int k = 1; k <= 3; ++k) {
            const MatrixOp pp = dirac_projector(b, k, +1);
            const MatrixOp pm = dirac_projector(b, k, -1);
            CHECK(pp * pp == pp);
            CHECK(pm * pm == pm);
            CHECK((pp * pm).is_zero());
            CHECK(pp + pm == MatrixOp::identity(4));
            CHECK(pp.adjoint() == pp);
            CHECK(pm.adjoint() == pm);
        }
    }
}

TEST_CASE("chiral projector is constant, the dressed pairs are not") {
    for (char b : {'a', 'b'}) {
        const MatrixOp p1p = dirac_projector(b, 1, +1);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                CHECK((p1p.at(i, j).is_zero() || p1p.at(i, j).is_constant()));
        bool dressed = false;
        const MatrixOp p2p = dirac_projector(b, 2, +1);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                dressed = dressed || !(p2p.at(i, j).is_zero() || p2p.at(i, j).is_constant());
        CHECK(dressed);
    }
}
