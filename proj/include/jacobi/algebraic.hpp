#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jacobi/gaussian.hpp"

namespace jacobi {

// Exact element of the field Q(i)(2^{1/D}): a finite sum of Gaussian-rational
// multiples of rational powers of 2.  Internally the value is stored over the
// generator t = 2^{1/D} as sum_k c_k t^k with exponents reduced into [0, D)
// via t^D = 2, and D shrunk to the least denominator actually needed.  Since
// x^D - 2 is irreducible over Q (Eisenstein at 2), the representation is
// canonical and the zero test is exact: a value is zero iff no terms remain.
class AlgebraicValue {
public:
    AlgebraicValue() = default;                     // zero
    AlgebraicValue(const GaussianRational& c);      // NOLINT: implicit on purpose
    AlgebraicValue(const Rational& c) : AlgebraicValue(GaussianRational(c)) {}
    AlgebraicValue(long c) : AlgebraicValue(GaussianRational(Rational(c))) {}

    // 2^e for rational e, e.g. pow2(3/2) = 2 * 2^{1/2}.
    static AlgebraicValue pow2(const Rational& e);
    // c * 2^e.
    static AlgebraicValue monomial(const GaussianRational& c, const Rational& e);

    bool is_zero() const { return c_.empty(); }
    bool is_rational() const;
    long degree() const { return d_; }

    // Terms as (coefficient, exponent-of-2) pairs.  Exponents are k/D with
    // 0 <= k < D, strictly increasing; integer parts of exponents are always
    // folded into the coefficients.
    std::vector<std::pair<GaussianRational, Rational>> terms() const;

    AlgebraicValue conj() const;
    AlgebraicValue operator-() const;
    AlgebraicValue& operator+=(const AlgebraicValue& o);
    AlgebraicValue& operator-=(const AlgebraicValue& o);
    AlgebraicValue& operator*=(const AlgebraicValue& o);
    AlgebraicValue inverse() const;  // NonInvertible on zero
    AlgebraicValue& operator/=(const AlgebraicValue& o) { return *this *= o.inverse(); }

    friend AlgebraicValue operator+(AlgebraicValue a, const AlgebraicValue& b) { return a += b; }
    friend AlgebraicValue operator-(AlgebraicValue a, const AlgebraicValue& b) { return a -= b; }
    friend AlgebraicValue operator*(AlgebraicValue a, const AlgebraicValue& b) { return a *= b; }
    friend AlgebraicValue operator/(AlgebraicValue a, const AlgebraicValue& b) { return a /= b; }
    friend bool operator==(const AlgebraicValue& a, const AlgebraicValue& b);

    // True when every coefficient is real.
    bool is_real() const;

    // Display form like "3/2 + 1/2*2^(1/2)"; "0" for zero.
    std::string str() const;

private:
    // Rebuild the canonical form: fold exponents into [0, D) with powers of 2
    // carried into coefficients, drop zero coefficients, shrink D.
    void reduce(std::map<long, GaussianRational>&& raw, long d);
    void lift_to(long d);

    long d_ = 1;                          // extension degree, t = 2^{1/D}
    std::map<long, GaussianRational> c_;  // exponent (of t) -> coefficient
};

} // namespace jacobi
