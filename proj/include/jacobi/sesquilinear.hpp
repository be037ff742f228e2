#pragma once

#include "jacobi/operator.hpp"
#include "jacobi/term_function.hpp"

namespace jacobi {

// Order-n sesquilinear boundary form.  With a_k(x) = (1-x)^{alpha+k} (1+x)^{beta+k},
//
//   [f,g]_n(x) = sum_{k=1..n} sum_{j=1..k} (-1)^{k+j} *
//                  { [a_k f^{(k)}]^{(k-j)} conj(g)^{(j-1)}
//                    - [a_k conj(g)^{(k)}]^{(k-j)} f^{(j-1)} },
//
// the orientation fixed so that n = 1 reduces to the modified Wronskian
//   [f,g]_1 = (1-x)^{alpha+1}(1+x)^{beta+1} (f' conj(g) - f conj(g)').
// The form is conjugate-linear in its second argument and skew-Hermitian:
// [g,f] = -conj([f,g]) as expressions.
TermFunction sesqui_form_expression(const TermFunction& f, const TermFunction& g, long n,
                                    const Params& p);

// Same double sum with the k-th layer weighted by form.C[k-1].  With the
// derived symmetric-form coefficients this is the exact boundary term of the
// integrated-by-parts n-th composition (used by the Green identity check);
// with unit weights it coincides with sesqui_form_expression.
TermFunction sesqui_form_expression_weighted(const TermFunction& f, const TermFunction& g,
                                             const SymmetricForm& form, const Params& p);

// Exact endpoint evaluation of the form.
struct SesquiResult {
    LimitClass at_plus, at_minus;
    AlgebraicValue full;  // value(+1) - value(-1)
};

// Throws IndeterminateLimit if either endpoint limit classifies Infinite,
// which signals an input pair outside the maximal domain.
SesquiResult sesqui_eval(const TermFunction& f, const TermFunction& g, long n, const Params& p);

// Classification of (1-x)^{alpha+1}(1+x)^{beta+1} f conj(g)' at both
// endpoints; finite limits here are the scalar obstruction to the strong
// limit-point property.
struct StrongLimitPointReport {
    LimitClass at_plus, at_minus;
};

StrongLimitPointReport strong_limit_point_check(const TermFunction& f, const TermFunction& g,
                                                const Params& p);

} // namespace jacobi
