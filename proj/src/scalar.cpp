#include "p13/scalar.hpp"

#include <cmath>
#include <sstream>

namespace p13 {

EndoSpec EndoSpec::rho(int k) {
    if (k < 1 || k > 3) throw Error("rho index out of range");
    EndoSpec e;
    e.p_reflect[k - 1] = true;
    return e;
}

EndoSpec EndoSpec::then(const EndoSpec& o) const {
    EndoSpec e;
    e.conj = conj != o.conj;
    for (int k = 0; k < 3; ++k) e.p_reflect[k] = p_reflect[k] != o.p_reflect[k];
    e.t_reflect = t_reflect != o.t_reflect;
    return e;
}

Poly p_square_sum() {
    Poly s;
    for (int k : {P1, P2, P3}) s += Poly::var(Var(k), 2);
    return s;
}

Poly p_perp_square() {
    Poly s;
    for (int k : {P1, P2}) s += Poly::var(Var(k), 2);
    return s;
}

ScalarExpr::ScalarExpr(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) { reduce(); }

ScalarExpr ScalarExpr::rational(long n, long d) {
    if (d == 0) throw DivisionByZero("rational with zero denominator");
    return ScalarExpr(GaussQ(Rat(n) / Rat(d)));
}

ScalarExpr ScalarExpr::p(int k) {
    if (k < 1 || k > 3) throw Error("p index out of range");
    return ScalarExpr(Poly::var(Var(P1 + k - 1)));
}

GaussQ ScalarExpr::constant_value() const {
    if (!is_constant()) throw NotScalar("constant_value on non-constant expression");
    return num.constant_value();
}

void ScalarExpr::reduce_trivial() {
    if (num.is_zero()) {
        den = Poly(GaussQ(1));
        return;
    }
    if (num.degree() > limits::max_scalar_degree)
        throw DegreeOverflow("scalar numerator degree " + std::to_string(num.degree()));
}

void ScalarExpr::reduce() {
    if (den.is_zero()) throw DivisionByZero("zero denominator");
    if (!den.base_only()) throw Error("denominator must be base_only");
    if (num.is_zero()) {
        den = Poly(GaussQ(1));
        return;
    }
    if (num.degree() + den.degree() > limits::max_scalar_degree)
        throw DegreeOverflow("scalar degree " + std::to_string(num.degree() + den.degree()));
    if (den.is_constant()) {
        GaussQ c = den.constant_value();
        if (!(c == GaussQ(1))) num = (GaussQ(1) / c) * num;
        den = Poly(GaussQ(1));
        return;
    }
    Poly g = den;
    for (int eps = 0; eps < 2 && !g.is_constant(); ++eps)
        for (int alpha = 0; alpha < 2 && !g.is_constant(); ++alpha)
            for (int rho = 0; rho < 2 && !g.is_constant(); ++rho) {
                Poly comp = num.component(eps, alpha, rho);
                if (!comp.is_zero()) g = gcd_base(g, comp);
            }
    if (!g.is_constant()) {
        num = *divide_exact(num, g);
        den = *divide_exact(den, g);
    }
    if (den.is_constant()) {
        GaussQ c = den.constant_value();
        num = (GaussQ(1) / c) * num;
        den = Poly(GaussQ(1));
        return;
    }
    GaussQ lc = den.lead().second;
    if (!(lc == GaussQ(1))) {
        GaussQ inv = GaussQ(1) / lc;
        num = inv * num;
        den = inv * den;
    }
}

ScalarExpr& ScalarExpr::operator+=(const ScalarExpr& o) {
    if (o.num.is_zero()) return *this;
    if (num.is_zero()) {
        *this = o;
        return *this;
    }
    if (den == o.den) {
        *this = ScalarExpr(num + o.num, den);
        return *this;
    }
    *this = ScalarExpr(num * o.den + o.num * den, den * o.den);
    return *this;
}

ScalarExpr& ScalarExpr::operator-=(const ScalarExpr& o) {
    *this += -o;
    return *this;
}

ScalarExpr operator-(const ScalarExpr& s) {
    ScalarExpr out;
    out.num = -s.num;
    out.den = s.den;
    return out;
}

ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b) {
    if (a.num.is_zero() || b.num.is_zero()) return {};
    if (a.den.is_one() && b.den.is_one()) return ScalarExpr(a.num * b.num);
    return {a.num * b.num, a.den * b.den};
}

ScalarExpr& ScalarExpr::operator*=(const ScalarExpr& o) {
    *this = *this * o;
    return *this;
}

ScalarExpr operator/(const ScalarExpr& a, const ScalarExpr& b) { return a * b.inverse(); }

ScalarExpr& ScalarExpr::operator/=(const ScalarExpr& o) {
    *this = *this / o;
    return *this;
}

namespace {

// Negates every term carrying an odd power of the given radical.
Poly flip_radical(const Poly& p, Var rad) {
    Poly out;
    for (const auto& [m, c] : p.terms) out.terms.emplace(m, (m[rad] & 1) ? -c : c);
    return out;
}

bool has_var(const Poly& p, Var v) {
    for (const auto& [m, c] : p.terms)
        if (m[v]) return true;
    return false;
}

}  // namespace

ScalarExpr ScalarExpr::inverse() const {
    if (num.is_zero()) throw DivisionByZero("inverse of zero");
    if (num.base_only()) return {den, num};
    Poly mult(GaussQ(1));
    Poly cur = num;
    for (Var rad : {VE, VA, VR}) {
        if (!has_var(cur, rad)) continue;
        Poly conj = flip_radical(cur, rad);
        cur = cur * conj;
        mult = mult * conj;
    }
    // cur is now the product over all radical conjugates; it vanishes iff
    // the numerator vanishes identically on one of the A-branches.
    if (cur.is_zero()) throw DivisionByZero("divisor vanishes on a branch");
    return {den * mult, cur};
}

ScalarExpr ScalarExpr::apply_endo(const EndoSpec& e) const {
    if (e.is_identity()) return *this;
    return {num.apply_signs(e.conj, e.p_reflect, e.t_reflect),
            den.apply_signs(e.conj, e.p_reflect, e.t_reflect)};
}

GaussQ ScalarExpr::eval_exact(const ExactPoint& pt) const {
    GaussQ d = den.eval_exact(pt);
    if (d.is_zero()) throw SingularPoint("denominator vanishes at sample point");
    return num.eval_exact(pt) / d;
}

std::complex<double> ScalarExpr::eval_num(const NumPoint& pt) const {
    std::complex<double> d = den.eval_num(pt);
    double dscale = den.eval_abs(pt);
    if (std::abs(d) <= 1e-9 * (dscale > 0 ? dscale : 1.0))
        throw SingularPoint("denominator numerically singular at sample point");
    return num.eval_num(pt) / d;
}

double ScalarExpr::magnitude(const NumPoint& pt) const {
    std::complex<double> d = den.eval_num(pt);
    if (std::abs(d) == 0.0) throw SingularPoint("denominator vanishes at sample point");
    return num.eval_abs(pt) / std::abs(d);
}

std::string ScalarExpr::str() const {
    if (den.is_one()) return num.str();
    std::ostringstream os;
    os << "(" << num.str() << ") / (" << den.str() << ")";
    return os.str();
}

ScalarExpr differentiate(const ScalarExpr& s, Var v) {
    if (v != T0 && v != P1 && v != P2 && v != P3)
        throw Error("differentiate: not a base variable");
    // Chain terms for the radicals in the numerator.
    Poly base = s.num.deriv_base(v);
    Poly ne, na, nr;
    for (const auto& [m, c] : s.num.terms) {
        if (m[VE] && v != T0) {
            Mono t = m;
            t[v] += 1;
            ne.insert(t, c);
        }
        if (m[VA] && v == P3) na.insert(m, c);
        if (m[VR] && (v == P1 || v == P2)) {
            Mono t = m;
            t[v] += 1;
            nr.insert(t, c);
        }
    }
    ScalarExpr dnum{base};
    if (!ne.is_zero()) dnum += ScalarExpr(ne, p_square_sum());
    if (!na.is_zero()) dnum += ScalarExpr(na, Poly::var(P3));
    if (!nr.is_zero()) dnum += ScalarExpr(nr, p_perp_square());

    ScalarExpr out = dnum * ScalarExpr(Poly(GaussQ(1)), s.den);
    Poly dden = s.den.deriv_base(v);
    if (!dden.is_zero()) out -= ScalarExpr(s.num * dden, s.den * s.den);
    return out;
}

}  // namespace p13
