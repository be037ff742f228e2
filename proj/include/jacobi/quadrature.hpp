#pragma once

#include <functional>

#include "jacobi/bigfloat.hpp"
#include "jacobi/params.hpp"
#include "jacobi/term_function.hpp"

namespace jacobi {

enum class QuadratureMethod { GaussLegendre, TanhSinh };

// Quadrature request: a closed subinterval strictly inside (-1, 1) -- the
// endpoint singularities of the weight are never bracketed -- together with
// the rule, the relative tolerance, and the refinement budget.
struct QuadratureSpec {
    Rational lo = Rational(-9, 10);
    Rational hi = Rational(9, 10);
    QuadratureMethod method = QuadratureMethod::TanhSinh;
    double target_rel_error = 1e-30;
    long max_subdivisions = 12;
    mpfr_prec_t precision_bits = 256;

    void validate() const;  // throws PreconditionViolated unless -1 < lo < hi < 1
};

// Value of sum_i c_i (1-x)^{a_i} (1+x)^{b_i} at a point strictly inside (-1, 1).
BigComplex eval_terms(const TermList& terms, const BigFloat& x);

// The term list representing f on [lo, hi]: the global list when present,
// otherwise the germ whose validity region ([0,1) at +1, (-1,0] at -1)
// contains the whole interval.  Null when no representation covers it.
const TermList* representation_on(const TermFunction& f, const Rational& lo, const Rational& hi);

// Adaptive integral of fn over (lo, hi).  Refines until two successive
// estimates agree to target_rel_error (relative to max(|I|, 1)); throws
// ToleranceNotMet when the budget runs out first.
BigComplex integrate(const std::function<BigComplex(const BigFloat&)>& fn,
                     const QuadratureSpec& spec);

// Inner product against the weight:
//   integral over [lo, hi] of f(x) conj(g(x)) (1-x)^alpha (1+x)^beta dx.
// Requires a representation of both functions on the interval (global terms,
// or one germ's validity region containing it); throws NoGlobalForm otherwise.
BigComplex weighted_integral_complex(const TermFunction& f, const TermFunction& g,
                                     const QuadratureSpec& spec, const Params& p);

// Real part of the same integral (the value itself for the self-adjoint
// pairings this toolkit works with).
BigFloat weighted_integral(const TermFunction& f, const TermFunction& g,
                           const QuadratureSpec& spec, const Params& p);

} // namespace jacobi
