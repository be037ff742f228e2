#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "jacobi/errors.hpp"

namespace jacobi {

using Int = mpz_class;

// Arbitrary-precision rational, always reduced, denominator always positive.
// Thin value wrapper over GMP's mpq_class; the wrapper exists because raw
// mpq_class does not canonicalize two-argument constructions, and because the
// project-wide textual form "p/q" lives here.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}          // NOLINT: implicit on purpose
    Rational(const Int& n) : v_(n) {}    // NOLINT
    Rational(long n, long d) { init(Int(n), Int(d)); }
    Rational(const Int& n, const Int& d) { init(n, d); }

    // Accepts "p", "p/q", optional leading '-' on p (or q, normalized away).
    static Rational parse(const std::string& s);

    const Int num() const { return v_.get_num(); }
    const Int den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // Largest integer not exceeding the value.
    Int floor() const {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
        return q;
    }

    Rational pow_int(long e) const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw NonInvertible("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    // "p" when the value is an integer, otherwise "p/q".
    std::string str() const {
        return is_integer() ? v_.get_num().get_str() : v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    double to_double() const { return v_.get_d(); }  // preview only, not exact

private:
    explicit Rational(mpq_class q) : v_(std::move(q)) {}
    void init(const Int& n, const Int& d) {
        if (sgn(d) == 0) throw NonInvertible("rational with zero denominator");
        v_ = mpq_class(n) / mpq_class(d);  // mpq_class division canonicalizes
    }
    mpq_class v_;
};

inline Rational Rational::pow_int(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw NonInvertible("0 raised to a negative power");
        return Rational(0);
    }
    mpq_class base = e < 0 ? mpq_class(1) / v_ : v_;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    mpq_class out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num().get_mpz_t(), k);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den().get_mpz_t(), k);
    return Rational(std::move(out));  // powers of a canonical value stay canonical
}

inline Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Int(s));
        }
        const std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
        if (ns.empty() || ds.empty()) throw ParseError("malformed rational literal: " + s);
        return Rational(Int(ns), Int(ds));
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed rational literal: " + s);
    } catch (const NonInvertible&) {
        throw ParseError("rational literal with zero denominator: " + s);
    }
}

// gcd/lcm on machine integers, used for extension-degree bookkeeping.
inline long gcd_long(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) { long t = a % b; a = b; b = t; }
    return a;
}
inline long lcm_long(long a, long b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_long(a, b) * b;
}

// Rising factorial (x)_m = x (x+1) ... (x+m-1); (x)_0 = 1.
inline Rational rising_factorial(const Rational& x, long m) {
    Rational out(1);
    for (long i = 0; i < m; ++i) out *= x + Rational(i);
    return out;
}

inline Rational factorial_rational(long m) {
    Rational out(1);
    for (long i = 2; i <= m; ++i) out *= Rational(i);
    return out;
}

inline Rational binomial_rational(long n, long k) {
    if (k < 0 || k > n) return Rational(0);
    Rational out(1);
    for (long i = 0; i < k; ++i) out *= Rational(n - i, i + 1);
    return out;
}

} // namespace jacobi
