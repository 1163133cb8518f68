#pragma once

#include "p13/error.hpp"
#include "p13/poly.hpp"

namespace p13 {

// Field endomorphism of the symbol algebra: optional coefficient
// conjugation plus sign reflections of t0 and the p_k. E, A, R are fixed
// by every endo here. Position operators transform upstream: x_k flips
// sign exactly when conj != p_reflect[k].
struct EndoSpec {
    bool conj = false;
    std::array<bool, 3> p_reflect{};
    bool t_reflect = false;

    [[nodiscard]] static EndoSpec identity() { return {}; }
    [[nodiscard]] static EndoSpec star() { return {true, {true, true, true}, false}; }
    [[nodiscard]] static EndoSpec adjoint_conj() { return {true, {}, false}; }
    [[nodiscard]] static EndoSpec rho(int k);  // k in 1..3
    [[nodiscard]] static EndoSpec rho123() { return {false, {true, true, true}, false}; }
    [[nodiscard]] static EndoSpec reflect_time() { return {false, {}, true}; }

    [[nodiscard]] EndoSpec then(const EndoSpec& o) const;
    [[nodiscard]] bool is_identity() const { return *this == EndoSpec{}; }
    [[nodiscard]] bool x_flip(int k) const { return conj != p_reflect[k]; }

    friend bool operator==(const EndoSpec&, const EndoSpec&) = default;
};

// Canonical fraction num/den. den lives in the base ring Q(i)[t0,p],
// is monic under graded lex and coprime to num; num carries the radicals
// with exponents at most one. Equality of canonical forms is literal
// equality, and a fraction vanishes on both A-branches iff num == 0.
class ScalarExpr {
public:
    Poly num;
    Poly den;

    ScalarExpr() : den(GaussQ(1)) {}
    ScalarExpr(Poly n) : num(std::move(n)), den(GaussQ(1)) { reduce_trivial(); }
    ScalarExpr(Poly n, Poly d);
    explicit ScalarExpr(GaussQ c) : num(std::move(c)), den(GaussQ(1)) {}

    [[nodiscard]] static ScalarExpr rational(long n, long d = 1);
    [[nodiscard]] static ScalarExpr imag_unit() { return ScalarExpr(GaussQ::i()); }
    [[nodiscard]] static ScalarExpr t0() { return ScalarExpr(Poly::var(T0)); }
    [[nodiscard]] static ScalarExpr p(int k);  // k in 1..3
    [[nodiscard]] static ScalarExpr energy() { return ScalarExpr(Poly::var(VE)); }
    [[nodiscard]] static ScalarExpr abs_p3() { return ScalarExpr(Poly::var(VA)); }
    [[nodiscard]] static ScalarExpr r_perp() { return ScalarExpr(Poly::var(VR)); }

    [[nodiscard]] bool is_zero() const { return num.is_zero(); }
    [[nodiscard]] bool is_constant() const { return num.is_constant() && den.is_one(); }
    [[nodiscard]] GaussQ constant_value() const;
    [[nodiscard]] bool is_one() const { return is_constant() && constant_value() == GaussQ(1); }
    [[nodiscard]] int degree() const { return num.degree() + den.degree(); }

    ScalarExpr& operator+=(const ScalarExpr& o);
    ScalarExpr& operator-=(const ScalarExpr& o);
    ScalarExpr& operator*=(const ScalarExpr& o);
    ScalarExpr& operator/=(const ScalarExpr& o);
    friend ScalarExpr operator+(ScalarExpr a, const ScalarExpr& b) {
        a += b;
        return a;
    }
    friend ScalarExpr operator-(ScalarExpr a, const ScalarExpr& b) {
        a -= b;
        return a;
    }
    friend ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b);
    friend ScalarExpr operator/(const ScalarExpr& a, const ScalarExpr& b);
    friend ScalarExpr operator-(const ScalarExpr& s);

    // Canonical forms are unique, so equality is syntactic.
    friend bool operator==(const ScalarExpr& a, const ScalarExpr& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const ScalarExpr& a, const ScalarExpr& b) { return !(a == b); }

    [[nodiscard]] ScalarExpr inverse() const;
    [[nodiscard]] ScalarExpr conj() const { return apply_endo(EndoSpec::adjoint_conj()); }
    [[nodiscard]] ScalarExpr apply_endo(const EndoSpec& e) const;

    [[nodiscard]] GaussQ eval_exact(const ExactPoint& pt) const;
    [[nodiscard]] std::complex<double> eval_num(const NumPoint& pt) const;
    // Scale used for relative tolerance: sum of |num term| over |den|.
    [[nodiscard]] double magnitude(const NumPoint& pt) const;

    [[nodiscard]] std::string str() const;

private:
    void reduce();
    void reduce_trivial();
};

// Partial derivative; v must be one of T0, P1, P2, P3. Radical chain rules
// introduce denominators p1^2+p2^2+p3^2, p3 and p1^2+p2^2.
[[nodiscard]] ScalarExpr differentiate(const ScalarExpr& s, Var v);

// Base polynomials used across the engine.
[[nodiscard]] Poly p_square_sum();   // p1^2+p2^2+p3^2
[[nodiscard]] Poly p_perp_square();  // p1^2+p2^2

}  // namespace p13
