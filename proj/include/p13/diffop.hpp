#pragma once

#include "p13/matrix.hpp"

#include <map>

namespace p13 {

using XMono = std::array<uint8_t, 3>;

[[nodiscard]] inline int x_total(const XMono& m) { return m[0] + m[1] + m[2]; }

// Matrix differential operator in the momentum representation, kept in
// normal form sum_alpha G_alpha(p, t0) x^alpha with the position operators
// x_k = i d/dp_k ordered to the right.
class DiffOp {
public:
    DiffOp() = default;
    explicit DiffOp(int n) : n_(n) {}
    DiffOp(MatrixOp g);  // x-free operator

    [[nodiscard]] static DiffOp x(int k, int n);  // x_k * Id, k in 1..3
    [[nodiscard]] static DiffOp scalar_op(int n, const ScalarExpr& s) {
        return DiffOp(MatrixOp::scalar_mat(n, s));
    }
    [[nodiscard]] static DiffOp identity(int n) { return DiffOp(MatrixOp::identity(n)); }

    [[nodiscard]] int dim() const { return n_; }
    [[nodiscard]] const std::map<XMono, MatrixOp>& terms() const { return terms_; }
    [[nodiscard]] MatrixOp coeff(const XMono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? MatrixOp(n_) : it->second;
    }
    [[nodiscard]] int x_degree() const {
        int d = 0;
        for (const auto& [m, g] : terms_) d = std::max(d, x_total(m));
        return d;
    }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }

    void add_term(const XMono& m, const MatrixOp& g);

    DiffOp& operator+=(const DiffOp& o);
    DiffOp& operator-=(const DiffOp& o);
    friend DiffOp operator+(DiffOp a, const DiffOp& b) {
        a += b;
        return a;
    }
    friend DiffOp operator-(DiffOp a, const DiffOp& b) {
        a -= b;
        return a;
    }
    friend DiffOp operator-(const DiffOp& a);
    friend DiffOp operator*(const DiffOp& a, const DiffOp& b);  // composition
    friend bool operator==(const DiffOp& a, const DiffOp& b) {
        return (a - b).is_zero();
    }
    friend bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a == b); }

    // Left multiplication by a symbol; needs no reordering.
    [[nodiscard]] DiffOp scale(const ScalarExpr& s) const;

    [[nodiscard]] DiffOp adjoint() const;
    [[nodiscard]] DiffOp apply_endo(const EndoSpec& e) const;

    [[nodiscard]] std::string str() const;

private:
    int n_ = 0;
    std::map<XMono, MatrixOp> terms_;
};

[[nodiscard]] DiffOp commutator(const DiffOp& a, const DiffOp& b);
[[nodiscard]] DiffOp anticommutator(const DiffOp& a, const DiffOp& b);

}  // namespace p13
