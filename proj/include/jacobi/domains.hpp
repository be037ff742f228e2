#pragma once

#include <span>
#include <vector>

#include "jacobi/catalog.hpp"
#include "jacobi/sesquilinear.hpp"

namespace jacobi {

// Membership in the maximal domain of the n-th composition: f and l^n[f]
// both square-integrable against the weight.  (Local absolute continuity is
// automatic for the closed term class.)
bool in_maximal(const TermFunction& f, long n, const Params& p);

// The two families of endpoint limits that are finite for every maximal
// domain function: weighted derivatives
//   (1-x)^{alpha+j} (1+x)^{beta+j} f^{(j)},              j = 0..n,
// and iterated derivatives of the weighted blocks
//   [ (1-x)^{alpha+k} (1+x)^{beta+k} f^{(k)} ]^{(k-j)},  k = 0..n, 1 <= j < k.
struct SmoothnessLimit {
    long k = -1;          // -1 for the first family
    long j = 0;
    LimitClass at_plus, at_minus;
};

struct DomainReport {
    bool in_max = false;
    std::vector<SmoothnessLimit> limits;
};

// Throws PreconditionViolated when f is not maximal.
DomainReport smoothness_report(const TermFunction& f, long n, const Params& p);

// Checks that every listed limit of every sample function is finite (never
// Infinite); precondition: every sample function is maximal.
bool verify_maxdomain_theorem(long n, const Params& p, std::span<const CatalogEntry> sample);

// Membership in the minimal domain: f is maximal and the boundary form
// against all 4n defect comparison functions vanishes (the comparison
// functions span the relevant complement of the minimal domain inside the
// maximal one, so vanishing against them decides membership).  Requires
// alpha > 0 and beta > 0 for the psi half of the basis.
bool in_minimal(const TermFunction& f, long n, const Params& p);

// The four characterizations of the power left-definite domain:
//   A:  (1-x)^{n(alpha+1)} (1+x)^{n(beta+1)} f^{(2n)} in L2 (and f maximal),
//   B:  [f, P_j]_n -> 0 at both endpoints for j = 0..n-1 (eigenpolynomials),
//   F:  [ a_j f^{(j)} ]^{(j-1)} -> 0 at both endpoints for j = 1..n,
//   LW: (1-x)^{j/2} (1+x)^{j/2} f^{(j)} in L2 for j = 0..2n.
// Every flag is computed for any parameters.  B, F, and LW agree pairwise on
// the closed term class for alpha, beta > 0.  A is the literal
// top-derivative condition and is checked independently: on inverse-power
// germs it can be strictly weaker than LW — for a germ (1-x)^e the A
// threshold is 2e + alpha > 2n(1 - alpha) - 1 while LW needs
// 2e + alpha > 2n - 1, so e.g. (1-x)^{1-alpha} at n = 2 passes A but fails
// the others whenever alpha > 1/3.  Sweeps therefore report an A-vs-LW
// separation instead of treating it as an error.
struct LeftDefFlags {
    bool A = false, B = false, F = false, LW = false;

    bool all_agree() const { return A == B && B == F && F == LW; }
};

LeftDefFlags leftdef_membership(const TermFunction& f, long n, const Params& p);

// The all-orders variant of the F condition: [f, 1]_j -> 0 at both endpoints
// for j = 1..n.  Equivalent to F by an exact triangular identity; exposed so
// the equivalence is testable.
bool leftdef_F_via_constants(const TermFunction& f, long n, const Params& p);

} // namespace jacobi
