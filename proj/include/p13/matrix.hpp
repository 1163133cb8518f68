#pragma once

#include "p13/scalar.hpp"

#include <vector>

namespace p13 {

// Dense matrix of symbols, dimensions 1, 2 or 4 in practice.
class MatrixOp {
public:
    MatrixOp() = default;
    explicit MatrixOp(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}

    [[nodiscard]] static MatrixOp identity(int n) {
        MatrixOp m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = ScalarExpr(GaussQ(1));
        return m;
    }
    [[nodiscard]] static MatrixOp scalar_mat(int n, const ScalarExpr& s) {
        MatrixOp m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = s;
        return m;
    }

    [[nodiscard]] int dim() const { return n_; }
    [[nodiscard]] ScalarExpr& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    [[nodiscard]] const ScalarExpr& at(int i, int j) const {
        return a_[static_cast<size_t>(i) * n_ + j];
    }

    MatrixOp& operator+=(const MatrixOp& o) {
        require_same(o);
        for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    MatrixOp& operator-=(const MatrixOp& o) {
        require_same(o);
        for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    friend MatrixOp operator+(MatrixOp a, const MatrixOp& b) {
        a += b;
        return a;
    }
    friend MatrixOp operator-(MatrixOp a, const MatrixOp& b) {
        a -= b;
        return a;
    }
    friend MatrixOp operator-(const MatrixOp& m) {
        MatrixOp out(m.n_);
        for (size_t k = 0; k < m.a_.size(); ++k) out.a_[k] = -m.a_[k];
        return out;
    }
    friend MatrixOp operator*(const MatrixOp& a, const MatrixOp& b) {
        if (a.n_ != b.n_) throw DimensionMismatch("matrix product");
        MatrixOp out(a.n_);
        for (int i = 0; i < a.n_; ++i)
            for (int k = 0; k < a.n_; ++k) {
                const ScalarExpr& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < a.n_; ++j) {
                    const ScalarExpr& bkj = b.at(k, j);
                    if (bkj.is_zero()) continue;
                    out.at(i, j) += aik * bkj;
                }
            }
        return out;
    }
    friend MatrixOp operator*(const ScalarExpr& s, const MatrixOp& m) {
        MatrixOp out(m.n_);
        for (size_t k = 0; k < m.a_.size(); ++k) out.a_[k] = s * m.a_[k];
        return out;
    }
    friend bool operator==(const MatrixOp& a, const MatrixOp& b) {
        return a.n_ == b.n_ && a.a_ == b.a_;
    }
    friend bool operator!=(const MatrixOp& a, const MatrixOp& b) { return !(a == b); }

    [[nodiscard]] bool is_zero() const {
        for (const auto& s : a_)
            if (!s.is_zero()) return false;
        return true;
    }
    [[nodiscard]] bool is_identity() const { return *this == identity(n_); }
    [[nodiscard]] bool is_scalar(ScalarExpr* value = nullptr) const {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                if (i != j && !at(i, j).is_zero()) return false;
                if (i != j) continue;
                if (!(at(i, j) == at(0, 0))) return false;
            }
        if (value) *value = n_ ? at(0, 0) : ScalarExpr{};
        return true;
    }

    [[nodiscard]] MatrixOp transpose() const {
        MatrixOp out(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) out.at(j, i) = at(i, j);
        return out;
    }
    [[nodiscard]] MatrixOp apply_endo(const EndoSpec& e) const {
        MatrixOp out(n_);
        for (size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k].apply_endo(e);
        return out;
    }
    [[nodiscard]] MatrixOp adjoint() const {
        return transpose().apply_endo(EndoSpec::adjoint_conj());
    }
    [[nodiscard]] MatrixOp deriv(Var v) const {
        MatrixOp out(n_);
        for (size_t k = 0; k < a_.size(); ++k) out.a_[k] = differentiate(a_[k], v);
        return out;
    }

    [[nodiscard]] std::vector<std::complex<double>> eval_num(const NumPoint& pt) const {
        std::vector<std::complex<double>> out(a_.size());
        for (size_t k = 0; k < a_.size(); ++k) out[k] = a_[k].eval_num(pt);
        return out;
    }
    [[nodiscard]] double magnitude(const NumPoint& pt) const {
        double m = 0.0;
        for (const auto& s : a_) m += s.magnitude(pt);
        return m;
    }

    [[nodiscard]] std::string str() const {
        std::string out = "[";
        for (int i = 0; i < n_; ++i) {
            out += i ? "; " : "";
            for (int j = 0; j < n_; ++j) {
                if (j) out += ", ";
                out += at(i, j).str();
            }
        }
        return out + "]";
    }

private:
    int n_ = 0;
    std::vector<ScalarExpr> a_;

    void require_same(const MatrixOp& o) const {
        if (n_ != o.n_) throw DimensionMismatch("matrix dimensions differ");
    }
};

// Pauli matrix, k in 1..3.
[[nodiscard]] inline MatrixOp sigma(int k) {
    MatrixOp m(2);
    ScalarExpr one(GaussQ(1)), i = ScalarExpr::imag_unit();
    switch (k) {
        case 1:
            m.at(0, 1) = one;
            m.at(1, 0) = one;
            break;
        case 2:
            m.at(0, 1) = -i;
            m.at(1, 0) = i;
            break;
        case 3:
            m.at(0, 0) = one;
            m.at(1, 1) = -one;
            break;
        default:
            throw Error("sigma index out of range");
    }
    return m;
}

// 4x4 matrix assembled from four 2x2 blocks.
[[nodiscard]] inline MatrixOp block2(const MatrixOp& b00, const MatrixOp& b01, const MatrixOp& b10,
                                     const MatrixOp& b11) {
    const MatrixOp* blocks[2][2] = {{&b00, &b01}, {&b10, &b11}};
    MatrixOp out(4);
    for (int bi = 0; bi < 2; ++bi)
        for (int bj = 0; bj < 2; ++bj) {
            const MatrixOp& b = *blocks[bi][bj];
            if (b.dim() != 2) throw DimensionMismatch("block2 expects 2x2 blocks");
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) out.at(2 * bi + i, 2 * bj + j) = b.at(i, j);
        }
    return out;
}

}  // namespace p13
