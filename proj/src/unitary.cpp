#include "p13/unitary.hpp"

#include <sstream>

namespace p13 {

namespace {

[[nodiscard]] ScalarExpr atom_expr(Atom a) {
    switch (a) {
        case Atom::E: return ScalarExpr::energy();
        case Atom::EpA: return ScalarExpr::energy() + ScalarExpr::abs_p3();
        case Atom::Ep3: return ScalarExpr::energy() + ScalarExpr::p(3);
        case Atom::Em3: return ScalarExpr::energy() - ScalarExpr::p(3);
    }
    throw Error("unknown atom");
}

[[nodiscard]] const char* atom_name(Atom a) {
    switch (a) {
        case Atom::E: return "E";
        case Atom::EpA: return "(E+A)";
        case Atom::Ep3: return "(E+p3)";
        case Atom::Em3: return "(E-p3)";
    }
    return "?";
}

[[nodiscard]] ScalarExpr pow_expr(const ScalarExpr& b, int e) {
    ScalarExpr out = ScalarExpr::rational(1);
    const ScalarExpr base = e < 0 ? b.inverse() : b;
    for (int i = 0; i < (e < 0 ? -e : e); ++i) out = out * base;
    return out;
}

// Integer square root with exactness check.
[[nodiscard]] bool exact_sqrt(const boost::multiprecision::mpz_int& n,
                              boost::multiprecision::mpz_int& root) {
    if (n < 0) return false;
    root = boost::multiprecision::sqrt(n);
    return root * root == n;
}

}  // namespace

ScalarExpr FactoredScalar::expand() const {
    ScalarExpr out{GaussQ{coeff, Rat(0)}};
    for (const auto& [a, e] : pw) out = out * pow_expr(atom_expr(a), e);
    return out;
}

ScalarExpr FactoredScalar::sqrt_expr() const {
    namespace mp = boost::multiprecision;
    if (coeff <= 0) throw NotScalar("sqrt of nonpositive coefficient");
    mp::mpz_int rn, rd;
    if (!exact_sqrt(mp::numerator(coeff), rn) || !exact_sqrt(mp::denominator(coeff), rd))
        throw NotScalar("sqrt: coefficient " + coeff.str() + " is not a perfect square");

    auto exp_of = [&](Atom a) { return pw.count(a) ? pw.at(a) : 0; };
    const int ep = exp_of(Atom::Ep3), em = exp_of(Atom::Em3);
    if (((ep ^ em) & 1) != 0)
        throw NotScalar("sqrt: unpaired odd exponent on E+p3 / E-p3");
    for (Atom a : {Atom::E, Atom::EpA})
        if (exp_of(a) % 2 != 0) throw NotScalar("sqrt: odd exponent on " + std::string(atom_name(a)));

    ScalarExpr out{GaussQ{Rat(rn) / Rat(rd), Rat(0)}};
    out = out * pow_expr(atom_expr(Atom::E), exp_of(Atom::E) / 2);
    out = out * pow_expr(atom_expr(Atom::EpA), exp_of(Atom::EpA) / 2);
    if (ep % 2 != 0) {
        // (E+p3)^ep (E-p3)^em = (E+p3)^(ep-1) (E-p3)^(em-1) R^2 with both now even.
        out = out * pow_expr(atom_expr(Atom::Ep3), (ep - 1) / 2);
        out = out * pow_expr(atom_expr(Atom::Em3), (em - 1) / 2);
        out = out * ScalarExpr::r_perp();
    } else {
        out = out * pow_expr(atom_expr(Atom::Ep3), ep / 2);
        out = out * pow_expr(atom_expr(Atom::Em3), em / 2);
    }
    return out;
}

std::string FactoredScalar::str() const {
    std::ostringstream os;
    os << coeff.str();
    for (const auto& [a, e] : pw) {
        os << "*" << atom_name(a);
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

// ============================================================================
// ScaledUnitary
// ============================================================================

void ScaledUnitary::certify() const {
    const ScalarExpr se = s.expand();
    const MatrixOp sid = MatrixOp::scalar_mat(n_mat.dim(), se);
    if (!(n_mat * n_inv == sid)) throw NotInverse(name + ": N*Ninv != s");
    if (!(n_inv * n_mat == sid)) throw NotInverse(name + ": Ninv*N != s");
    if (!(n_mat.adjoint() * n_mat == sid)) throw NotInverse(name + ": N^dag*N != s");
}

DiffOp ScaledUnitary::conjugate(const DiffOp& g, bool forward) const {
    if (g.dim() != n_mat.dim()) throw DimensionMismatch("conjugate: dim");
    const ScalarExpr se = s.expand();
    const ScalarExpr sinv = se.inverse();
    // Forward conjugation is backward conjugation by the inverse kernel,
    // which shares s; both directions therefore use the same x shift.
    const GaussQ half_i{Rat(0), Rat(-1, 2)};

    // Shifted coordinates S_k = x_k - (i/2)(d_k s)/s commute pairwise, so the
    // substituted monomial is an unambiguous ordered product.
    const int n = g.dim();
    std::array<DiffOp, 3> shifted{};
    for (int k = 0; k < 3; ++k) {
        const ScalarExpr ck = ScalarExpr(half_i) * differentiate(se, static_cast<Var>(P1 + k)) * sinv;
        shifted[k] = DiffOp::x(k + 1, n) + DiffOp::scalar_op(n, ck);
    }

    DiffOp sub{n};
    for (const auto& [mono, mat] : g.terms()) {
        DiffOp term = DiffOp(mat);
        for (int k = 0; k < 3; ++k)
            for (int j = 0; j < mono[static_cast<std::size_t>(k)]; ++j) term = term * shifted[k];
        sub = sub + term;
    }

    const MatrixOp& left = forward ? n_mat : n_inv;
    const MatrixOp& right = forward ? n_inv : n_mat;
    return (DiffOp(left) * sub * DiffOp(right)).scale(sinv);
}

MatrixOp ScaledUnitary::transport(const MatrixOp& m, const EndoSpec& twist, bool forward) const {
    if (m.dim() != n_mat.dim()) throw DimensionMismatch("transport: dim");
    const ScalarExpr root = (s * s.apply_endo(twist)).sqrt_expr();
    const ScalarExpr scale = root.inverse();
    if (forward) return scale * (n_mat * m * n_inv.apply_endo(twist));
    return scale * (n_inv * m * n_mat.apply_endo(twist));
}

// ============================================================================
// Kernel catalog
// ============================================================================

namespace {

// s1 p2 - s2 p1 as an explicit Hermitian matrix.
[[nodiscard]] MatrixOp w_matrix() {
    MatrixOp w{2};
    const ScalarExpr i = ScalarExpr::imag_unit();
    w.at(0, 1) = ScalarExpr::p(2) + i * ScalarExpr::p(1);
    w.at(1, 0) = ScalarExpr::p(2) - i * ScalarExpr::p(1);
    return w;
}

[[nodiscard]] ScaledUnitary kernel_from(std::string name, const ScalarExpr& diag, Atom datom) {
    const MatrixOp d = MatrixOp::scalar_mat(2, diag);
    const MatrixOp iw = MatrixOp::scalar_mat(2, ScalarExpr::imag_unit()) * w_matrix();
    ScaledUnitary u;
    u.name = std::move(name);
    u.n_mat = d - iw;
    u.n_inv = d + iw;
    u.s = FactoredScalar(Rat(2));
    u.s.mul(Atom::E, 1).mul(datom, 1);
    return u;
}

}  // namespace

ScaledUnitary kernel_v1() {
    return kernel_from("v1", ScalarExpr::energy() + ScalarExpr::abs_p3(), Atom::EpA);
}

ScaledUnitary kernel_v() {
    return kernel_from("v", ScalarExpr::energy() + ScalarExpr::p(3), Atom::Ep3);
}

}  // namespace p13
