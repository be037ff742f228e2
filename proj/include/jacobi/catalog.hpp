#pragma once

#include <string>
#include <vector>

#include "jacobi/term_function.hpp"

namespace jacobi {

// Endpoint comparison functions and exact eigenpolynomials.  Germ-type
// entries are supported near one endpoint and identically zero near the
// other; behaviour between the endpoints is irrelevant to every exact
// operation, which only ever looks at germs.

// phi_j: (1 -/+ x)^j near the chosen endpoint, zero germ at the other.
// At +1 the germ is (1-x)^j; at -1 it is (1+x)^j.
TermFunction phi(long j, Endpoint side);

// psi_j: the inverse-power comparison function (1-x)^{-alpha+j} near +1
// (needs alpha > 0), or (1+x)^{-beta+j} near -1 (needs beta > 0).  At the
// degenerate parameter the second solution acquires a logarithm and leaves
// the closed term algebra, hence the gate.
TermFunction psi(long j, Endpoint side, const Params& p);

// Exact eigenpolynomial of degree m, coefficients from the terminating
// hypergeometric sum
//   P_m(x) = sum_{j=0..m} (-1/2)^j (m+a+b+1)_j (a+j+1)_{m-j} / (j! (m-j)!) (1-x)^j
// with a = alpha, b = beta (rising-factorial notation).  Carries a global
// term list; the -1 germ is the exact re-expansion in powers of (1+x).
TermFunction jacobi_poly(long m, const Params& p);

// Eigenvalue m (m + alpha + beta + 1) of the m-th eigenpolynomial.
Rational eigenvalue(long m, const Params& p);

// Truncated local solutions of l[f] = lambda f at an endpoint, for
// lambda = mu (mu + alpha + beta + 1).  First kind: the terminating-or-not
// hypergeometric series in the half-endpoint variable, truncated after
// (1 -/+ x)^truncation_order.  Second kind: (1 -/+ x)^{-alpha} (resp. -beta)
// times its series, truncated the same way, normalized so the leading
// coefficient is 1 (any constant multiple solves the same equation; no
// specific normalization is asserted).  The second kind requires a positive
// endpoint parameter.
struct LocalSolutions {
    Germ first_kind;
    Germ second_kind;
};

LocalSolutions local_solution_germs(const Rational& mu, Endpoint side, long truncation_order,
                                    const Params& p);

// Named catalog entries used by the domain and verification sweeps.
struct CatalogEntry {
    std::string name;
    TermFunction fn;
};

// The 4n defect comparison functions in documented order: for each side
// (+1 first) phi_0..phi_{n-1} then psi_0..psi_{n-1}.
std::vector<CatalogEntry> defect_basis(long n, const Params& p);

// Standard verification sample: phi and psi germs with index < n + extra at
// both endpoints (psi only when the side parameter is positive) plus
// eigenpolynomials of degree <= max_poly_degree.
std::vector<CatalogEntry> standard_catalog(long n, long extra, long max_poly_degree, const Params& p);

} // namespace jacobi
