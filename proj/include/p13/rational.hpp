#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <complex>
#include <ostream>
#include <sstream>
#include <string>

namespace p13 {

using Rat = boost::multiprecision::mpq_rational;

/// Exact complex number with rational real and imaginary parts.
/// This is the coefficient field of every polynomial in the engine.
struct GaussQ {
    Rat re{0};
    Rat im{0};

    GaussQ() = default;
    GaussQ(long r) : re(r) {}
    GaussQ(Rat r) : re(std::move(r)) {}
    GaussQ(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static GaussQ i() { return GaussQ{Rat(0), Rat(1)}; }

    [[nodiscard]] bool is_zero() const { return re == 0 && im == 0; }
    [[nodiscard]] bool is_real() const { return im == 0; }
    [[nodiscard]] GaussQ conj() const { return {re, -im}; }
    [[nodiscard]] Rat norm2() const { return re * re + im * im; }

    GaussQ& operator+=(const GaussQ& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussQ& operator-=(const GaussQ& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }

    friend GaussQ operator+(const GaussQ& a, const GaussQ& b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussQ operator-(const GaussQ& a, const GaussQ& b) { return {a.re - b.re, a.im - b.im}; }
    friend GaussQ operator-(const GaussQ& a) { return {-a.re, -a.im}; }
    friend GaussQ operator*(const GaussQ& a, const GaussQ& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussQ operator/(const GaussQ& a, const GaussQ& b) {
        Rat n = b.norm2();
        GaussQ num = a * b.conj();
        return {num.re / n, num.im / n};
    }
    friend bool operator==(const GaussQ& a, const GaussQ& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GaussQ& a, const GaussQ& b) { return !(a == b); }

    [[nodiscard]] std::complex<double> to_complex() const {
        return {re.convert_to<double>(), im.convert_to<double>()};
    }

    [[nodiscard]] std::string str() const {
        std::ostringstream os;
        os << *this;
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussQ& g) {
        if (g.im == 0) return os << g.re;
        if (g.re == 0) {
            if (g.im == 1) return os << "i";
            if (g.im == -1) return os << "-i";
            return os << g.im << "*i";
        }
        os << "(" << g.re;
        if (g.im > 0)
            os << "+" << g.im << "*i)";
        else
            os << "-" << -g.im << "*i)";
        return os;
    }
};

}  // namespace p13
