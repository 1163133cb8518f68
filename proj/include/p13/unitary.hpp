#pragma once

#include "p13/diffop.hpp"
#include "p13/error.hpp"
#include "p13/matrix.hpp"
#include "p13/scalar.hpp"

#include <map>
#include <string>

namespace p13 {

// ============================================================================
// Factored positive scalars and scaled unitaries
// ============================================================================

// Multiplicative monoid generated by the positive atoms E, E+A, E+p3, E-p3
// with a positive rational coefficient.  Every normalizer squared that shows
// up in the kernel catalog lives here, and so does every twisted product
// s * omega(s), which keeps square roots exact.
enum class Atom : int { E = 0, EpA = 1, Ep3 = 2, Em3 = 3 };

struct FactoredScalar {
    Rat coeff{1};
    std::map<Atom, int> pw;

    FactoredScalar() = default;
    explicit FactoredScalar(Rat c) : coeff(std::move(c)) {}

    [[nodiscard]] static FactoredScalar atom(Atom a, int e = 1) {
        FactoredScalar f;
        if (e != 0) f.pw[a] = e;
        return f;
    }

    FactoredScalar& mul(Atom a, int e) {
        if (e == 0) return *this;
        int& cur = pw[a];
        cur += e;
        if (cur == 0) pw.erase(a);
        return *this;
    }

    [[nodiscard]] FactoredScalar operator*(const FactoredScalar& o) const {
        FactoredScalar out = *this;
        out.coeff *= o.coeff;
        for (const auto& [a, e] : o.pw) out.mul(a, e);
        return out;
    }

    // Frame maps only touch p3: a p3 reflection swaps E+p3 and E-p3.  E and
    // E+A are invariant under every reflection and under conjugation.
    [[nodiscard]] FactoredScalar apply_endo(const EndoSpec& e) const {
        FactoredScalar out = *this;
        if (e.p_reflect[2]) {
            const int a = out.pw.count(Atom::Ep3) ? out.pw.at(Atom::Ep3) : 0;
            const int b = out.pw.count(Atom::Em3) ? out.pw.at(Atom::Em3) : 0;
            out.pw.erase(Atom::Ep3);
            out.pw.erase(Atom::Em3);
            if (b != 0) out.pw[Atom::Ep3] = b;
            if (a != 0) out.pw[Atom::Em3] = a;
        }
        return out;
    }

    [[nodiscard]] ScalarExpr expand() const;

    // Exact square root of an even element; throws NotScalar if the exponent
    // pattern or the coefficient is not a perfect square.  Odd exponents on
    // E+p3 and E-p3 reduce jointly through (E+p3)(E-p3) = R^2.
    [[nodiscard]] ScalarExpr sqrt_expr() const;

    [[nodiscard]] std::string str() const;
};

// Unitary stored in fraction-free form V = N / sqrt(s) with every certificate
// expressed over the exact scalar field:
//   N * Ninv == s * Id,   Ninv * N == s * Id,   adjoint(N) * N == s * Id.
struct ScaledUnitary {
    std::string name;
    MatrixOp n_mat;
    MatrixOp n_inv;
    FactoredScalar s;

    // Verifies the three defining identities; throws NotInverse on failure.
    void certify() const;

    // Backward conjugation V^-1 G V (wavefunctions transform as psi -> V^-1 psi,
    // so operators acquire this form); forward gives V G V^-1.  The scalar
    // sqrt enters only through the x shift x_k -> x_k -+ (i/2) (d_k s)/s.
    [[nodiscard]] DiffOp conjugate(const DiffOp& g, bool forward = false) const;

    // Transport of an x-free candidate m attached to a frame endo `twist`:
    // backward Ninv * m * twist(N) / sqrt(s * twist(s)), forward with N and
    // Ninv exchanged.  The twisted norm stays inside the atom monoid, so the
    // square root is exact.
    [[nodiscard]] MatrixOp transport(const MatrixOp& m, const EndoSpec& twist,
                                     bool forward = false) const;
};

// (E+A) - i(s1 p2 - s2 p1), norm^2 = 2E(E+A).
[[nodiscard]] ScaledUnitary kernel_v1();

// (E+p3) - i(s1 p2 - s2 p1), norm^2 = 2E(E+p3).
[[nodiscard]] ScaledUnitary kernel_v();

}  // namespace p13
