#pragma once

#include "p13/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace p13 {

// Variable slots. T0 and P1..P3 span the base ring; E, A, R generate
// quadratic extensions with
//   E^2 = p1^2 + p2^2 + p3^2,   A^2 = p3^2,   R^2 = p1^2 + p2^2.
// A carries the sign ambiguity of |p3|: identities are tested on both
// branches A = +p3 and A = -p3. E and R are the positive roots.
enum Var : int { T0 = 0, P1 = 1, P2 = 2, P3 = 3, VE = 4, VA = 5, VR = 6 };

using Mono = std::array<uint8_t, 7>;

[[nodiscard]] inline int total_degree(const Mono& m) {
    int d = 0;
    for (auto e : m) d += e;
    return d;
}

// Graded lex order; true when a < b.
[[nodiscard]] bool mono_less(const Mono& a, const Mono& b);

struct ExactPoint {
    Rat t0, p1, p2, p3, e, a, r;
};

struct NumPoint {
    double t0, p1, p2, p3, e, a, r;
};

class Poly {
public:
    std::map<Mono, GaussQ> terms;

    Poly() = default;
    explicit Poly(GaussQ c);
    [[nodiscard]] static Poly var(Var v, int exp = 1);
    [[nodiscard]] static Poly constant(long c) { return Poly(GaussQ(c)); }

    [[nodiscard]] bool is_zero() const { return terms.empty(); }
    [[nodiscard]] bool is_constant() const;
    [[nodiscard]] GaussQ constant_value() const;
    [[nodiscard]] bool is_one() const;
    [[nodiscard]] int degree() const;
    [[nodiscard]] bool base_only() const;
    [[nodiscard]] size_t size() const { return terms.size(); }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) {
        a += b;
        return a;
    }
    friend Poly operator-(Poly a, const Poly& b) {
        a -= b;
        return a;
    }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const GaussQ& c, const Poly& p);
    friend Poly operator-(const Poly& p);
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms == b.terms; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    [[nodiscard]] Poly conj_coeffs() const;

    // Coefficient conjugation plus sign flips p_k -> -p_k, t0 -> -t0.
    // Radical slots are left untouched; E, A, R are invariant by design.
    [[nodiscard]] Poly apply_signs(bool conj, const std::array<bool, 3>& p_reflect,
                                   bool t_reflect) const;

    // Branch specialization A -> sign * p3, sign in {+1, -1}.
    [[nodiscard]] Poly substitute_a(int sign) const;

    // Coefficient of E^eps A^alpha R^rho as a base-only poly.
    [[nodiscard]] Poly component(int eps, int alpha, int rho) const;

    // Formal derivative with E, A, R held fixed; v must be in {T0..P3}.
    [[nodiscard]] Poly deriv_base(Var v) const;

    [[nodiscard]] GaussQ eval_exact(const ExactPoint& pt) const;
    [[nodiscard]] std::complex<double> eval_num(const NumPoint& pt) const;
    // Sum of |coeff| * |mono(pt)|, the natural scale for relative tolerance.
    [[nodiscard]] double eval_abs(const NumPoint& pt) const;

    // Leading term under graded lex.
    [[nodiscard]] std::pair<Mono, GaussQ> lead() const;

    [[nodiscard]] std::string str() const;

    // Adds c * m, rewriting radical squares down to the base ring.
    void insert(const Mono& m, const GaussQ& c);
};

// Exact division f / g. g must be base_only; division is performed on each
// of the eight radical components. nullopt when g does not divide f.
[[nodiscard]] std::optional<Poly> divide_exact(const Poly& f, const Poly& g);

// GCD over Q(i)[t0,p1,p2,p3] by primitive PRS; inputs must be base_only.
// Result is monic in its graded-lex leading coefficient.
[[nodiscard]] Poly gcd_base(const Poly& f, const Poly& g);

}  // namespace p13
