#pragma once

#include <string>

#include <mpfr.h>

#include "jacobi/algebraic.hpp"
#include "jacobi/rational.hpp"

namespace jacobi {

// Arbitrary-precision floating-point value with explicit working precision in
// bits.  RAII wrapper over one mpfr_t; binary operations round to the larger
// of the two operand precisions.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 256) { mpfr_init2(x_, prec); mpfr_set_zero(x_, 1); }
    BigFloat(const BigFloat& o) { mpfr_init2(x_, mpfr_get_prec(o.x_)); mpfr_set(x_, o.x_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept { mpfr_init2(x_, mpfr_get_prec(o.x_)); mpfr_swap(x_, o.x_); }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) { mpfr_set_prec(x_, mpfr_get_prec(o.x_)); mpfr_set(x_, o.x_, MPFR_RNDN); }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept { mpfr_swap(x_, o.x_); return *this; }
    ~BigFloat() { mpfr_clear(x_); }

    static BigFloat from_long(long v, mpfr_prec_t prec) {
        BigFloat out(prec);
        mpfr_set_si(out.x_, v, MPFR_RNDN);
        return out;
    }
    static BigFloat from_rational(const Rational& v, mpfr_prec_t prec) {
        BigFloat out(prec);
        mpfr_set_q(out.x_, v.raw().get_mpq_t(), MPFR_RNDN);
        return out;
    }
    static BigFloat from_double(double v, mpfr_prec_t prec) {
        BigFloat out(prec);
        mpfr_set_d(out.x_, v, MPFR_RNDN);
        return out;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(x_); }
    mpfr_ptr raw() { return x_; }
    mpfr_srcptr raw() const { return x_; }

    int sign() const { return mpfr_sgn(x_); }
    bool is_zero() const { return mpfr_zero_p(x_); }
    bool is_finite() const { return mpfr_number_p(x_); }

    BigFloat operator-() const { BigFloat out(prec()); mpfr_neg(out.x_, x_, MPFR_RNDN); return out; }
    BigFloat abs() const { BigFloat out(prec()); mpfr_abs(out.x_, x_, MPFR_RNDN); return out; }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat out(join(a, b)); mpfr_add(out.x_, a.x_, b.x_, MPFR_RNDN); return out;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat out(join(a, b)); mpfr_sub(out.x_, a.x_, b.x_, MPFR_RNDN); return out;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat out(join(a, b)); mpfr_mul(out.x_, a.x_, b.x_, MPFR_RNDN); return out;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat out(join(a, b)); mpfr_div(out.x_, a.x_, b.x_, MPFR_RNDN); return out;
    }

    BigFloat& operator+=(const BigFloat& o) { mpfr_add(x_, x_, o.x_, MPFR_RNDN); return *this; }
    BigFloat& operator-=(const BigFloat& o) { mpfr_sub(x_, x_, o.x_, MPFR_RNDN); return *this; }
    BigFloat& operator*=(const BigFloat& o) { mpfr_mul(x_, x_, o.x_, MPFR_RNDN); return *this; }
    BigFloat& operator/=(const BigFloat& o) { mpfr_div(x_, x_, o.x_, MPFR_RNDN); return *this; }

    friend int cmp(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_); }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return cmp(a, b) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) >= 0; }

    BigFloat sqrt() const { BigFloat out(prec()); mpfr_sqrt(out.x_, x_, MPFR_RNDN); return out; }
    BigFloat exp() const { BigFloat out(prec()); mpfr_exp(out.x_, x_, MPFR_RNDN); return out; }
    BigFloat log() const { BigFloat out(prec()); mpfr_log(out.x_, x_, MPFR_RNDN); return out; }
    BigFloat log2() const { BigFloat out(prec()); mpfr_log2(out.x_, x_, MPFR_RNDN); return out; }
    BigFloat sinh() const { BigFloat out(prec()); mpfr_sinh(out.x_, x_, MPFR_RNDN); return out; }
    BigFloat cosh() const { BigFloat out(prec()); mpfr_cosh(out.x_, x_, MPFR_RNDN); return out; }
    BigFloat tanh() const { BigFloat out(prec()); mpfr_tanh(out.x_, x_, MPFR_RNDN); return out; }
    BigFloat cos() const { BigFloat out(prec()); mpfr_cos(out.x_, x_, MPFR_RNDN); return out; }

    static BigFloat pi(mpfr_prec_t prec) {
        BigFloat out(prec); mpfr_const_pi(out.raw(), MPFR_RNDN); return out;
    }
    // 2^e with exact binary scaling.
    static BigFloat pow2(long e, mpfr_prec_t prec) {
        BigFloat out(prec); mpfr_set_si_2exp(out.raw(), 1, e, MPFR_RNDN); return out;
    }

    // this^e for real exponents; base must be positive unless e is integral.
    BigFloat pow(const BigFloat& e) const {
        BigFloat out(join(*this, e)); mpfr_pow(out.x_, x_, e.x_, MPFR_RNDN); return out;
    }
    BigFloat pow(const Rational& e) const { return pow(from_rational(e, prec())); }

    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

    std::string str(std::size_t digits = 30) const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), x_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

private:
    static mpfr_prec_t join(const BigFloat& a, const BigFloat& b) {
        return a.prec() > b.prec() ? a.prec() : b.prec();
    }
    mpfr_t x_;
};

// Complex value over BigFloat; only the operations the quadrature and
// evaluation paths need.
struct BigComplex {
    BigFloat re, im;

    explicit BigComplex(mpfr_prec_t prec = 256) : re(prec), im(prec) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    static BigComplex from_gaussian(const GaussianRational& c, mpfr_prec_t prec) {
        return {BigFloat::from_rational(c.re, prec), BigFloat::from_rational(c.im, prec)};
    }

    BigComplex operator-() const { return {-re, -im}; }
    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    BigComplex& operator+=(const BigComplex& o) { re += o.re; im += o.im; return *this; }
    BigComplex& operator-=(const BigComplex& o) { re -= o.re; im -= o.im; return *this; }

    BigComplex scale(const BigFloat& f) const { return {re * f, im * f}; }
    BigComplex conj() const { return {re, -im}; }

    BigFloat abs() const { return (re * re + im * im).sqrt(); }
};

// Numeric embedding of an exact algebraic value: sum of c_k * 2^{e_k}
// evaluated with guard bits so the result carries relative error at most
// 2^{1-prec} of the true value.
BigComplex embed(const AlgebraicValue& v, mpfr_prec_t prec);
BigFloat embed_real(const AlgebraicValue& v, mpfr_prec_t prec);

} // namespace jacobi
