#include "p13/poly.hpp"

#include "p13/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace p13 {

bool mono_less(const Mono& a, const Mono& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
}

Poly::Poly(GaussQ c) {
    if (!c.is_zero()) terms.emplace(Mono{}, std::move(c));
}

Poly Poly::var(Var v, int exp) {
    if (exp < 0) throw Error("negative exponent in Poly::var");
    Poly out;
    Mono m{};
    m[v] = static_cast<uint8_t>(exp);
    out.insert(m, GaussQ(1));
    return out;
}

bool Poly::is_constant() const {
    if (terms.empty()) return true;
    return terms.size() == 1 && terms.begin()->first == Mono{};
}

GaussQ Poly::constant_value() const {
    if (terms.empty()) return GaussQ(0);
    if (!is_constant()) throw Error("constant_value on non-constant poly");
    return terms.begin()->second;
}

bool Poly::is_one() const { return is_constant() && constant_value() == GaussQ(1); }

int Poly::degree() const {
    int d = 0;
    for (const auto& [m, c] : terms) d = std::max(d, total_degree(m));
    return d;
}

bool Poly::base_only() const {
    for (const auto& [m, c] : terms)
        if (m[VE] || m[VA] || m[VR]) return false;
    return true;
}

void Poly::insert(const Mono& m, const GaussQ& c) {
    if (c.is_zero()) return;
    if (m[VE] >= 2) {
        Mono b = m;
        b[VE] -= 2;
        for (int k : {P1, P2, P3}) {
            Mono t = b;
            t[k] += 2;
            insert(t, c);
        }
        return;
    }
    if (m[VA] >= 2) {
        Mono b = m;
        b[VA] -= 2;
        b[P3] += 2;
        insert(b, c);
        return;
    }
    if (m[VR] >= 2) {
        Mono b = m;
        b[VR] -= 2;
        for (int k : {P1, P2}) {
            Mono t = b;
            t[k] += 2;
            insert(t, c);
        }
        return;
    }
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms) insert(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms) insert(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            Mono m;
            for (int k = 0; k < 7; ++k) {
                int e = ma[k] + mb[k];
                if (e > 255) throw DegreeOverflow("monomial exponent overflow");
                m[k] = static_cast<uint8_t>(e);
            }
            out.insert(m, ca * cb);
        }
    return out;
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly operator*(const GaussQ& c, const Poly& p) {
    Poly out;
    if (c.is_zero()) return out;
    for (const auto& [m, pc] : p.terms) out.terms.emplace(m, c * pc);
    return out;
}

Poly operator-(const Poly& p) {
    Poly out;
    for (const auto& [m, c] : p.terms) out.terms.emplace(m, -c);
    return out;
}

Poly Poly::conj_coeffs() const {
    Poly out;
    for (const auto& [m, c] : terms) out.terms.emplace(m, c.conj());
    return out;
}

Poly Poly::apply_signs(bool conj, const std::array<bool, 3>& p_reflect, bool t_reflect) const {
    Poly out;
    for (const auto& [m, c] : terms) {
        int flips = 0;
        if (t_reflect) flips += m[T0];
        for (int k = 0; k < 3; ++k)
            if (p_reflect[k]) flips += m[P1 + k];
        GaussQ cc = conj ? c.conj() : c;
        if (flips & 1) cc = -cc;
        out.terms.emplace(m, cc);
    }
    return out;
}

Poly Poly::substitute_a(int sign) const {
    Poly out;
    for (const auto& [m, c] : terms) {
        Mono b = m;
        int a = b[VA];
        b[VA] = 0;
        b[P3] += a;
        GaussQ cc = c;
        if (sign < 0 && (a & 1)) cc = -cc;
        out.insert(b, cc);
    }
    return out;
}

Poly Poly::component(int eps, int alpha, int rho) const {
    Poly out;
    for (const auto& [m, c] : terms) {
        if (m[VE] == eps && m[VA] == alpha && m[VR] == rho) {
            Mono b = m;
            b[VE] = b[VA] = b[VR] = 0;
            out.terms.emplace(b, c);
        }
    }
    return out;
}

Poly Poly::deriv_base(Var v) const {
    Poly out;
    for (const auto& [m, c] : terms) {
        if (m[v] == 0) continue;
        Mono b = m;
        b[v] -= 1;
        out.insert(b, GaussQ(Rat(static_cast<long>(m[v]))) * c);
    }
    return out;
}

namespace {

Rat rat_pow(const Rat& x, int e) {
    Rat out(1);
    for (int k = 0; k < e; ++k) out *= x;
    return out;
}

double dbl_pow(double x, int e) { return std::pow(x, e); }

const char* var_name(int v) {
    static const char* names[7] = {"t0", "p1", "p2", "p3", "E", "A", "R"};
    return names[v];
}

}  // namespace

GaussQ Poly::eval_exact(const ExactPoint& pt) const {
    const Rat* vals[7] = {&pt.t0, &pt.p1, &pt.p2, &pt.p3, &pt.e, &pt.a, &pt.r};
    GaussQ acc(0);
    for (const auto& [m, c] : terms) {
        Rat v(1);
        for (int k = 0; k < 7; ++k)
            if (m[k]) v *= rat_pow(*vals[k], m[k]);
        acc += GaussQ(v) * c;
    }
    return acc;
}

std::complex<double> Poly::eval_num(const NumPoint& pt) const {
    const double vals[7] = {pt.t0, pt.p1, pt.p2, pt.p3, pt.e, pt.a, pt.r};
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [m, c] : terms) {
        double v = 1.0;
        for (int k = 0; k < 7; ++k)
            if (m[k]) v *= dbl_pow(vals[k], m[k]);
        acc += c.to_complex() * v;
    }
    return acc;
}

double Poly::eval_abs(const NumPoint& pt) const {
    const double vals[7] = {pt.t0, pt.p1, pt.p2, pt.p3, pt.e, pt.a, pt.r};
    double acc = 0.0;
    for (const auto& [m, c] : terms) {
        double v = 1.0;
        for (int k = 0; k < 7; ++k)
            if (m[k]) v *= dbl_pow(std::abs(vals[k]), m[k]);
        acc += std::abs(c.to_complex()) * v;
    }
    return acc;
}

std::pair<Mono, GaussQ> Poly::lead() const {
    if (terms.empty()) throw Error("lead of zero poly");
    auto best = terms.begin();
    for (auto it = std::next(terms.begin()); it != terms.end(); ++it)
        if (mono_less(best->first, it->first)) best = it;
    return {best->first, best->second};
}

std::string Poly::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Print highest degree first for readability.
    std::vector<std::pair<Mono, GaussQ>> sorted(terms.begin(), terms.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return mono_less(b.first, a.first); });
    for (const auto& [m, c] : sorted) {
        if (!first) os << " + ";
        first = false;
        os << c;
        for (int k = 0; k < 7; ++k) {
            if (!m[k]) continue;
            os << "*" << var_name(k);
            if (m[k] > 1) os << "^" << int(m[k]);
        }
    }
    return os.str();
}

// === exact division and gcd ===

namespace {

// Division by a base-only divisor within one radical component.
std::optional<Poly> divide_base(Poly f, const Poly& g) {
    Poly q;
    auto [gm, gc] = g.lead();
    while (!f.is_zero()) {
        auto [fm, fc] = f.lead();
        Mono qm;
        for (int k = 0; k < 7; ++k) {
            if (fm[k] < gm[k]) return std::nullopt;
            qm[k] = static_cast<uint8_t>(fm[k] - gm[k]);
        }
        GaussQ qc = fc / gc;
        Poly t;
        t.terms.emplace(qm, qc);
        q += t;
        f -= t * g;
    }
    return q;
}

int deg_in(const Poly& f, Var v) {
    int d = -1;
    for (const auto& [m, c] : f.terms) d = std::max(d, int(m[v]));
    return d;
}

Poly coeff_of(const Poly& f, Var v, int k) {
    Poly out;
    for (const auto& [m, c] : f.terms)
        if (m[v] == k) {
            Mono b = m;
            b[v] = 0;
            out.terms.emplace(b, c);
        }
    return out;
}

Poly mul_var_pow(const Poly& f, Var v, int k) {
    Poly out;
    for (const auto& [m, c] : f.terms) {
        Mono b = m;
        int e = b[v] + k;
        if (e > 255) throw DegreeOverflow("exponent overflow in gcd");
        b[v] = static_cast<uint8_t>(e);
        out.terms.emplace(b, c);
    }
    return out;
}

Poly monic(Poly f) {
    if (f.is_zero()) return f;
    auto [m, c] = f.lead();
    if (c == GaussQ(1)) return f;
    return (GaussQ(1) / c) * f;
}

Poly content_in(const Poly& f, Var v) {
    Poly c;
    int d = deg_in(f, v);
    for (int k = d; k >= 0; --k) {
        Poly ck = coeff_of(f, v, k);
        if (ck.is_zero()) continue;
        c = c.is_zero() ? monic(ck) : gcd_base(c, ck);
        if (c.is_constant()) return Poly(GaussQ(1));
    }
    return c;
}

// Pseudo-remainder of f by g in variable v.
Poly prem(Poly f, const Poly& g, Var v) {
    int dg = deg_in(g, v);
    Poly lcg = coeff_of(g, v, dg);
    while (!f.is_zero() && deg_in(f, v) >= dg) {
        int df = deg_in(f, v);
        Poly lcf = coeff_of(f, v, df);
        f = lcg * f - mul_var_pow(lcf * g, v, df - dg);
    }
    return f;
}

}  // namespace

std::optional<Poly> divide_exact(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw DivisionByZero("divide_exact by zero");
    if (!g.base_only()) throw Error("divide_exact divisor must be base_only");
    if (f.is_zero()) return Poly{};
    if (g.is_constant()) return (GaussQ(1) / g.constant_value()) * f;
    Poly out;
    for (int eps = 0; eps < 2; ++eps)
        for (int alpha = 0; alpha < 2; ++alpha)
            for (int rho = 0; rho < 2; ++rho) {
                Poly comp = f.component(eps, alpha, rho);
                if (comp.is_zero()) continue;
                auto q = divide_base(std::move(comp), g);
                if (!q) return std::nullopt;
                Mono rad{};
                rad[VE] = static_cast<uint8_t>(eps);
                rad[VA] = static_cast<uint8_t>(alpha);
                rad[VR] = static_cast<uint8_t>(rho);
                Poly radp;
                radp.terms.emplace(rad, GaussQ(1));
                out += *q * radp;
            }
    return out;
}

Poly gcd_base(const Poly& f, const Poly& g) {
    if (!f.base_only() || !g.base_only()) throw Error("gcd_base needs base_only inputs");
    if (f.is_zero()) return monic(g);
    if (g.is_zero()) return monic(f);
    if (f.is_constant() || g.is_constant()) return Poly(GaussQ(1));
    if (f == g) return monic(f);

    Var v = T0;
    bool found = false;
    for (int k = 3; k >= 0; --k) {
        if (deg_in(f, Var(k)) > 0 || deg_in(g, Var(k)) > 0) {
            v = Var(k);
            found = true;
            break;
        }
    }
    if (!found) return Poly(GaussQ(1));

    Poly cf = content_in(f, v);
    Poly cg = content_in(g, v);
    Poly fp = *divide_exact(f, cf);
    Poly gp = *divide_exact(g, cg);
    Poly c = gcd_base(cf, cg);

    // Primitive PRS in v.
    if (deg_in(fp, v) < deg_in(gp, v)) std::swap(fp, gp);
    while (!gp.is_zero()) {
        if (deg_in(gp, v) == 0) {
            // v-free nonzero remainder: the univariate gcd is a content.
            gp = Poly(GaussQ(1));
            fp = gp;
            break;
        }
        Poly r = prem(fp, gp, v);
        fp = gp;
        if (r.is_zero()) {
            gp = Poly{};
        } else {
            Poly cr = content_in(r, v);
            gp = *divide_exact(r, cr);
        }
    }
    Poly prim = fp;
    Poly pc = content_in(prim, v);
    prim = *divide_exact(prim, pc);
    return monic(c * prim);
}

}  // namespace p13
