#pragma once

#include <vector>

#include "jacobi/gaussian.hpp"
#include "jacobi/params.hpp"

namespace jacobi {

// One closed-form summand c * (1-x)^a * (1+x)^b with exact Gaussian-rational
// coefficient and exact rational exponents.  The class is closed under
// addition, multiplication, differentiation and division by the weight, which
// is what makes every endpoint limit in this project decidable symbolically.
struct Term {
    GaussianRational coeff;
    Rational a, b;

    Term() = default;
    Term(GaussianRational c, Rational a_, Rational b_)
        : coeff(std::move(c)), a(std::move(a_)), b(std::move(b_)) {}
};

// Sum of terms.  Canonical form: no zero coefficients, exponent pairs unique,
// sorted lexicographically by (a, b).
using TermList = std::vector<Term>;

// Restore the canonical form after any raw manipulation.
TermList collect(TermList terms);

TermList add(const TermList& x, const TermList& y);
TermList negate(TermList x);
TermList scale(TermList x, const GaussianRational& c);
TermList mul(const TermList& x, const TermList& y);
TermList conjugate(TermList x);

// Multiply by (1-x)^da (1+x)^db.
TermList shift_powers(TermList x, const Rational& da, const Rational& db);

// d/dx via d/dx[c (1-x)^a (1+x)^b] = -c a (1-x)^{a-1}(1+x)^b
//                                    + c b (1-x)^a (1+x)^{b-1}.
TermList derivative(const TermList& x);
TermList derivative(TermList x, long order);

// Divide by the weight (1-x)^alpha (1+x)^beta.
inline TermList divide_by_weight(TermList x, const Params& p) {
    return shift_powers(std::move(x), -p.alpha, -p.beta);
}

// The basis (1-x)^a (1+x)^b is linearly dependent across integer exponent
// shifts, because (1+x) = 2 - (1-x): the same function can carry several
// collected representations.  canonicalize removes the redundancy within a
// list: in each class of terms whose (1+x)-exponents differ by integers,
// every term is expanded over the least exponent present via
//   (1+x)^{m+k} = (1+x)^m (2 - (1-x))^k,     k a nonnegative integer,
// after which the (1-x)-powers at a fixed (1+x)-exponent are linearly
// independent.  A list canonicalizes to empty iff it represents the zero
// function; that makes the zero test exact.  The anchor exponent is the least
// of the class *present in the list*, so two equal functions are compared by
// canonicalizing their difference (common anchors), never side-by-side.
TermList canonicalize(TermList terms);

// Exact functional zero test and equality (via the difference).
inline bool is_zero(const TermList& x) { return x.empty() || canonicalize(x).empty(); }
bool equal(const TermList& x, const TermList& y);

// Representation-level equality (term-by-term after collect), used where the
// precise representation matters rather than the function it denotes.
bool identical(const TermList& x, const TermList& y);

} // namespace jacobi
