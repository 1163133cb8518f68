#include "p13/dirac.hpp"

#include "p13/error.hpp"

namespace p13 {

namespace {

MatrixOp const_mat4(std::array<std::array<int, 2>, 16> re_im) {
    MatrixOp m{4};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const auto& c = re_im[static_cast<std::size_t>(i * 4 + j)];
            if (c[0] || c[1])
                m.at(i, j) = ScalarExpr(GaussQ{Rat(c[0]), Rat(c[1])});
        }
    return m;
}

GammaBasis build_basis_b() {
    GammaBasis b;
    b.name = 'b';
    // g0 = diag(1,1,-1,-1); g_k = offdiag(sigma_k, -sigma_k).
    b.g[0] = const_mat4({{{1, 0}, {0, 0}, {0, 0}, {0, 0},
                          {0, 0}, {1, 0}, {0, 0}, {0, 0},
                          {0, 0}, {0, 0}, {-1, 0}, {0, 0},
                          {0, 0}, {0, 0}, {0, 0}, {-1, 0}}});
    const std::array<MatrixOp, 3> s = {sigma(1), sigma(2), sigma(3)};
    for (int k = 0; k < 3; ++k) {
        MatrixOp m{4};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                m.at(i, j + 2) = s[static_cast<std::size_t>(k)].at(i, j);
                m.at(i + 2, j) = ScalarExpr::rational(-1) * s[static_cast<std::size_t>(k)].at(i, j);
            }
        b.g[static_cast<std::size_t>(k + 1)] = m;
    }
    b.g4 = ScalarExpr::imag_unit() * (b.g[0] * b.g[1] * b.g[2] * b.g[3]);
    return b;
}

// Basis a is the conjugate of basis b by a constant permutation chosen so
// that g0 becomes diag(sigma3, -sigma3) = diag(1,-1,-1,1).
MatrixOp perm_a() {
    MatrixOp p{4};
    p.at(0, 0) = ScalarExpr::rational(1);
    p.at(1, 2) = ScalarExpr::rational(1);
    p.at(2, 3) = ScalarExpr::rational(1);
    p.at(3, 1) = ScalarExpr::rational(1);
    return p;
}

GammaBasis build_basis_a() {
    const GammaBasis& b = gamma_basis('b');
    const MatrixOp s = perm_a();
    const MatrixOp sinv = s.transpose();  // permutations are orthogonal
    GammaBasis a;
    a.name = 'a';
    for (int mu = 0; mu < 4; ++mu)
        a.g[static_cast<std::size_t>(mu)] = s * b.g[static_cast<std::size_t>(mu)] * sinv;
    a.g4 = s * b.g4 * sinv;
    return a;
}

[[nodiscard]] MatrixOp gamma_dot_p(const GammaBasis& b) {
    MatrixOp out{4};
    for (int k = 1; k <= 3; ++k) out += ScalarExpr::p(k) * b.g[static_cast<std::size_t>(k)];
    return out;
}

[[nodiscard]] MatrixOp dirac_h(const GammaBasis& b) { return b.g[0] * gamma_dot_p(b); }

}  // namespace

const GammaBasis& gamma_basis(char name) {
    static const GammaBasis bb = build_basis_b();
    if (name == 'b') return bb;
    static const GammaBasis ba = build_basis_a();  // reads bb, so must follow its init
    if (name == 'a') return ba;
    throw UnknownRep(std::string("gamma basis ") + name);
}

void certify_clifford(const GammaBasis& b) {
    const MatrixOp id = MatrixOp::identity(4);
    const std::array<int, 4> eta = {1, -1, -1, -1};
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            MatrixOp anti = b.g[static_cast<std::size_t>(mu)] * b.g[static_cast<std::size_t>(nu)]
                          + b.g[static_cast<std::size_t>(nu)] * b.g[static_cast<std::size_t>(mu)];
            MatrixOp want = mu == nu
                ? ScalarExpr::rational(2 * eta[static_cast<std::size_t>(mu)]) * id
                : MatrixOp{4};
            if (!(anti == want)) throw NotClosed("clifford anticommutator failed");
        }
    if (!(b.g[0].adjoint() == b.g[0])) throw NotClosed("g0 must be Hermitian");
    for (int k = 1; k <= 3; ++k)
        if (!(b.g[static_cast<std::size_t>(k)].adjoint() == -b.g[static_cast<std::size_t>(k)]))
            throw NotClosed("g_k must be anti-Hermitian");
    if (!(b.g4.adjoint() == b.g4)) throw NotClosed("g4 must be Hermitian");
    if (!((b.g4 * b.g4) == id)) throw NotClosed("g4^2 must be 1");
    for (int mu = 0; mu < 4; ++mu) {
        MatrixOp anti = b.g4 * b.g[static_cast<std::size_t>(mu)] + b.g[static_cast<std::size_t>(mu)] * b.g4;
        if (!anti.is_zero()) throw NotClosed("g4 must anticommute with g_mu");
    }
}

std::array<DiffOp, 10> dirac_gens(char basis) {
    const GammaBasis& b = gamma_basis(basis);
    const int n = 4;
    const DiffOp H{dirac_h(b)};
    const ScalarExpr quarter_i{GaussQ{Rat(0), Rat(1, 4)}};

    auto spin = [&](int k, int l) {
        const MatrixOp& gk = b.g[static_cast<std::size_t>(k)];
        const MatrixOp& gl = b.g[static_cast<std::size_t>(l)];
        return quarter_i * (gk * gl - gl * gk);
    };
    auto orbital = [&](int k, int l) {
        return DiffOp::x(k, n) * DiffOp::scalar_op(n, ScalarExpr::p(l))
             - DiffOp::x(l, n) * DiffOp::scalar_op(n, ScalarExpr::p(k));
    };
    auto boost = [&](int k) {
        return DiffOp::scalar_op(n, ScalarExpr::t0() * ScalarExpr::p(k))
             - anticommutator(DiffOp::x(k, n), H).scale(ScalarExpr::rational(1, 2));
    };

    std::array<DiffOp, 10> g;
    g[GP0] = H;
    for (int k = 1; k <= 3; ++k) g[static_cast<std::size_t>(GP0 + k)] = DiffOp::scalar_op(n, ScalarExpr::p(k));
    g[GJ12] = orbital(1, 2) + DiffOp(spin(1, 2));
    g[GJ13] = orbital(1, 3) + DiffOp(spin(1, 3));
    g[GJ23] = orbital(2, 3) + DiffOp(spin(2, 3));
    g[GJ01] = boost(1);
    g[GJ02] = boost(2);
    g[GJ03] = boost(3);
    return g;
}

ScaledUnitary kernel_u(char basis) {
    const GammaBasis& b = gamma_basis(basis);
    const MatrixOp e = MatrixOp::scalar_mat(4, ScalarExpr::energy());
    const MatrixOp gp = gamma_dot_p(b);
    ScaledUnitary u;
    u.name = std::string("u_") + basis;
    u.n_mat = e + gp;
    u.n_inv = e - gp;
    u.s = FactoredScalar(Rat(2));
    u.s.mul(Atom::E, 2);
    return u;
}

ScaledUnitary kernel_weyl(char basis) {
    const GammaBasis& b = gamma_basis(basis);
    const MatrixOp id = MatrixOp::identity(4);
    const MatrixOp m = b.g4 * b.g[0];
    ScaledUnitary u;
    u.name = std::string("weyl_") + basis;
    u.n_mat = id - m;
    u.n_inv = id + m;
    u.s = FactoredScalar(Rat(2));
    return u;
}

MatrixOp dirac_projector(char basis, int kind, int sign) {
    const GammaBasis& b = gamma_basis(basis);
    const ScalarExpr inv_e = ScalarExpr::energy().inverse();
    MatrixOp core{4};
    switch (kind) {
        case 1: core = b.g4; break;
        case 2: core = inv_e * (b.g4 * dirac_h(b)); break;
        case 3: core = inv_e * dirac_h(b); break;
        default: throw UnknownRep("projector kind out of range");
    }
    const ScalarExpr h = ScalarExpr::rational(1, 2);
    const ScalarExpr sg = ScalarExpr::rational(sign > 0 ? 1 : -1, 2);
    return h * MatrixOp::identity(4) + sg * core;
}

}  // namespace p13
