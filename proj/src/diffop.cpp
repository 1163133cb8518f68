#include "p13/diffop.hpp"

#include <sstream>

namespace p13 {

DiffOp::DiffOp(MatrixOp g) : n_(g.dim()) { add_term(XMono{}, g); }

DiffOp DiffOp::x(int k, int n) {
    if (k < 1 || k > 3) throw Error("x index out of range");
    DiffOp op(n);
    XMono m{};
    m[k - 1] = 1;
    op.add_term(m, MatrixOp::identity(n));
    return op;
}

void DiffOp::add_term(const XMono& m, const MatrixOp& g) {
    if (n_ == 0) n_ = g.dim();
    if (g.dim() != n_) throw DimensionMismatch("DiffOp term dimension");
    if (g.is_zero()) return;
    if (x_total(m) > limits::max_x_degree)
        throw DegreeOverflow("x degree " + std::to_string(x_total(m)));
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, g);
    } else {
        it->second += g;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
    if (o.n_ && n_ && o.n_ != n_) throw DimensionMismatch("DiffOp sum");
    for (const auto& [m, g] : o.terms_) add_term(m, g);
    return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
    if (o.n_ && n_ && o.n_ != n_) throw DimensionMismatch("DiffOp difference");
    for (const auto& [m, g] : o.terms_) add_term(m, -g);
    return *this;
}

DiffOp operator-(const DiffOp& a) {
    DiffOp out(a.n_);
    for (const auto& [m, g] : a.terms_) out.terms_.emplace(m, -g);
    return out;
}

namespace {

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long out = 1;
    for (int j = 1; j <= k; ++j) out = out * (n - j + 1) / j;
    return out;
}

// i^k as an exact coefficient.
GaussQ i_pow(int k) {
    switch (k & 3) {
        case 0: return GaussQ(1);
        case 1: return GaussQ::i();
        case 2: return GaussQ(-1);
        default: return -GaussQ::i();
    }
}

MatrixOp deriv_multi(const MatrixOp& g, const XMono& gamma) {
    MatrixOp out = g;
    for (int k = 0; k < 3; ++k)
        for (int j = 0; j < gamma[k]; ++j) out = out.deriv(Var(P1 + k));
    return out;
}

}  // namespace

// x^alpha G(p) = sum_{gamma <= alpha} C(alpha,gamma) i^|gamma| (d^gamma G) x^(alpha-gamma)
DiffOp operator*(const DiffOp& a, const DiffOp& b) {
    if (a.n_ != b.n_) throw DimensionMismatch("DiffOp composition");
    DiffOp out(a.n_);
    for (const auto& [alpha, G] : a.terms_) {
        for (const auto& [beta, H] : b.terms_) {
            XMono gamma{};
            for (gamma[0] = 0; gamma[0] <= alpha[0]; ++gamma[0])
                for (gamma[1] = 0; gamma[1] <= alpha[1]; ++gamma[1])
                    for (gamma[2] = 0; gamma[2] <= alpha[2]; ++gamma[2]) {
                        long c = binom(alpha[0], gamma[0]) * binom(alpha[1], gamma[1]) *
                                 binom(alpha[2], gamma[2]);
                        MatrixOp dH = deriv_multi(H, gamma);
                        if (dH.is_zero()) continue;
                        GaussQ coef = GaussQ(c) * i_pow(x_total(gamma));
                        XMono m{};
                        for (int k = 0; k < 3; ++k)
                            m[k] = static_cast<uint8_t>(alpha[k] - gamma[k] + beta[k]);
                        out.add_term(m, ScalarExpr(coef) * (G * dH));
                    }
        }
    }
    return out;
}

DiffOp DiffOp::scale(const ScalarExpr& s) const {
    DiffOp out(n_);
    if (s.is_zero()) return out;
    for (const auto& [m, g] : terms_) out.add_term(m, s * g);
    return out;
}

DiffOp DiffOp::adjoint() const {
    DiffOp out(n_);
    for (const auto& [alpha, G] : terms_) {
        // (G x^alpha)^+ = x^alpha G^+, then reorder x to the right.
        MatrixOp H = G.adjoint();
        XMono gamma{};
        for (gamma[0] = 0; gamma[0] <= alpha[0]; ++gamma[0])
            for (gamma[1] = 0; gamma[1] <= alpha[1]; ++gamma[1])
                for (gamma[2] = 0; gamma[2] <= alpha[2]; ++gamma[2]) {
                    long c = binom(alpha[0], gamma[0]) * binom(alpha[1], gamma[1]) *
                             binom(alpha[2], gamma[2]);
                    MatrixOp dH = deriv_multi(H, gamma);
                    if (dH.is_zero()) continue;
                    GaussQ coef = GaussQ(c) * i_pow(x_total(gamma));
                    XMono m{};
                    for (int k = 0; k < 3; ++k) m[k] = static_cast<uint8_t>(alpha[k] - gamma[k]);
                    out.add_term(m, ScalarExpr(coef) * dH);
                }
    }
    return out;
}

DiffOp DiffOp::apply_endo(const EndoSpec& e) const {
    DiffOp out(n_);
    for (const auto& [m, g] : terms_) {
        int flips = 0;
        for (int k = 0; k < 3; ++k)
            if (e.x_flip(k)) flips += m[k];
        MatrixOp h = g.apply_endo(e);
        out.add_term(m, (flips & 1) ? -h : h);
    }
    return out;
}

std::string DiffOp::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, g] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << g.str();
        for (int k = 0; k < 3; ++k) {
            if (!m[k]) continue;
            os << "*x" << (k + 1);
            if (m[k] > 1) os << "^" << int(m[k]);
        }
    }
    return os.str();
}

DiffOp commutator(const DiffOp& a, const DiffOp& b) { return a * b - b * a; }

DiffOp anticommutator(const DiffOp& a, const DiffOp& b) { return a * b + b * a; }

}  // namespace p13
