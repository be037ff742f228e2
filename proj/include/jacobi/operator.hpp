#pragma once

#include <vector>

#include "jacobi/term_function.hpp"

namespace jacobi {

// One application of the weighted Sturm-Liouville expression
//   l[f](x) = -(1/w) [ (1-x)^{alpha+1} (1+x)^{beta+1} f'(x) ]',
//   w(x) = (1-x)^alpha (1+x)^beta,
// computed exactly in the term algebra.
TermFunction apply_l(const TermFunction& f, const Params& p);

// n-fold composition l^n[f], n >= 0 (n = 0 is the identity).
TermFunction apply_ln_composed(TermFunction f, long n, const Params& p);

// Coefficients of the Lagrangian symmetric form of the n-th composition:
//   l^n[f] = (1/w) * sum_{k=1..n} (-1)^k [ C(n,k) (1-x)^{alpha+k} (1+x)^{beta+k} f^{(k)} ]^{(k)},
// with C(n,n) = 1.  The coefficients are derived, not transcribed: an exact
// linear solve matches the symmetric ansatz against the composition on the
// monomials (1-x)^j, j = 0..2n+2, and the result is re-verified on (1+x)^j.
struct SymmetricForm {
    long n = 1;
    std::vector<Rational> C;  // C[k-1] = C(n, k), k = 1..n
};

SymmetricForm derive_symmetric_coefficients(long n, const Params& p);

// Evaluate the symmetric form of l^n with the given coefficients.
TermFunction apply_ln_symmetric(const TermFunction& f, const SymmetricForm& form, const Params& p);

// Exact dense linear solve A x = rhs over the rationals; the system may be
// overdetermined but must be consistent with a unique solution, otherwise
// SingularSystem is thrown.
std::vector<Rational> solve_rational(std::vector<std::vector<Rational>> A, std::vector<Rational> rhs);

} // namespace jacobi
