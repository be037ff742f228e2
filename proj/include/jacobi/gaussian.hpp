#pragma once

#include <string>

#include "jacobi/rational.hpp"

namespace jacobi {

// Element of Q(i): re + im*i with exact rational parts.
struct GaussianRational {
    Rational re, im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT: implicit on purpose
    GaussianRational(long r) : re(r) {}                 // NOLINT
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }

    GaussianRational conj() const { return GaussianRational(re, -im); }

    // |z|^2 = re^2 + im^2, exact and rational.
    Rational norm() const { return re * re + im * im; }

    GaussianRational operator-() const { return GaussianRational(-re, -im); }
    GaussianRational& operator+=(const GaussianRational& o) { re += o.re; im += o.im; return *this; }
    GaussianRational& operator-=(const GaussianRational& o) { re -= o.re; im -= o.im; return *this; }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re * o.re - im * o.im;
        Rational i2 = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i2);
        return *this;
    }
    GaussianRational inverse() const {
        if (is_zero()) throw NonInvertible("inverse of zero in Q(i)");
        const Rational n = norm();
        return GaussianRational(re / n, -im / n);
    }
    GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) { return a.re == b.re && a.im == b.im; }

    // "p/q" for real values, "p/qi" for purely imaginary ones, "a+bi"/"a-bi"
    // otherwise; "i" and "-i" for the units.
    std::string str() const;

    // Accepts the forms produced by str() plus bare "i"/"-i"/"+i" pieces.
    static GaussianRational parse(const std::string& s);
};

inline std::string GaussianRational::str() const {
    auto imag_part = [&](bool with_sign) {
        std::string sign = im.sign() < 0 ? "-" : (with_sign ? "+" : "");
        Rational mag = im.abs();
        if (mag == Rational(1)) return sign + "i";
        return sign + mag.str() + "i";
    };
    if (im.is_zero()) return re.str();
    if (re.is_zero()) return imag_part(false);
    return re.str() + imag_part(true);
}

inline GaussianRational GaussianRational::parse(const std::string& s) {
    if (s.empty()) throw ParseError("empty Gaussian rational literal");
    // Split at the last '+' or '-' that is not the leading sign and not inside
    // a denominator; rational literals contain no signs past position 0 of
    // each component, so any interior sign starts the imaginary part.
    auto parse_imag_unit = [](std::string t) -> Rational {
        // t ends with 'i'; strip it and parse the coefficient.
        t.pop_back();
        if (t.empty() || t == "+") return Rational(1);
        if (t == "-") return Rational(-1);
        return Rational::parse(t[0] == '+' ? t.substr(1) : t);
    };
    if (s.back() == 'i') {
        std::size_t split = std::string::npos;
        for (std::size_t k = s.size() - 1; k > 0; --k) {
            if (s[k] == '+' || s[k] == '-') { split = k; break; }
        }
        if (split == std::string::npos || split == 0) {
            // Purely imaginary.
            return GaussianRational(Rational(0), parse_imag_unit(s));
        }
        return GaussianRational(Rational::parse(s.substr(0, split)), parse_imag_unit(s.substr(split)));
    }
    return GaussianRational(Rational::parse(s));
}

} // namespace jacobi
