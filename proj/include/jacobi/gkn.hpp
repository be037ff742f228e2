#pragma once

#include <string>
#include <utility>
#include <vector>

#include "jacobi/domains.hpp"

namespace jacobi {

using AMatrix = std::vector<std::vector<AlgebraicValue>>;

// 2n x 2n matrix of boundary-form values over one endpoint's comparison
// basis phi_0..phi_{n-1}, psi_0..psi_{n-1}; entry (i, j) is the full
// evaluation of [b_i, b_j]_n.  Requires a positive parameter at the chosen
// endpoint (psi half of the basis).
AMatrix build_pairing_matrix(long n, Endpoint side, const Params& p);

// Exact rank by fraction-free (Bareiss) elimination over Q(i)(2^{1/D});
// mixed extension degrees are lifted on the fly.
long exact_rank(AMatrix m);

// A boundary condition: an exact linear combination of term functions.  A
// single function is the combination with coefficient 1; the extension
// builder produces genuine combinations whose coefficients live in the
// algebraic scalar field.
struct BoundaryCondition {
    std::string label;
    std::vector<std::pair<AlgebraicValue, TermFunction>> parts;

    static BoundaryCondition single(std::string label, TermFunction f);
};

struct BoundaryConditionSet {
    long n = 1;
    std::vector<BoundaryCondition> conditions;
};

// Full boundary-form value between two conditions, extended from term
// functions by linearity in the first slot and conjugate-linearity in the
// second.
AlgebraicValue boundary_form_full(const BoundaryCondition& w1, const BoundaryCondition& w2, long n,
                                  const Params& p);

// Every pairwise boundary-form value vanishes (diagonal included): the
// symmetry condition a set of Glazman-style boundary conditions must satisfy
// to cut out a self-adjoint restriction.
bool glazman_symmetry_check(const BoundaryConditionSet& w, const Params& p);

// Linear independence of the conditions modulo the minimal domain, decided
// exactly: the conditions are paired against all 4n defect comparison
// functions and the resulting matrix must have full row rank.  (A maximal
// domain function lies in the minimal domain iff its boundary form against
// the comparison functions vanishes, so a combination dependent modulo the
// minimal domain shows up as a rank drop.)  Requires alpha, beta > 0.
bool lin_indep_mod_minimal(const BoundaryConditionSet& w, const Params& p);

// Number of scalar endpoint conditions a set imposes, counting a condition
// once per endpoint where it has a nonvanishing germ.
long condition_count(const BoundaryConditionSet& w);

// Whether two boundary-condition sets cut out the same self-adjoint
// restriction: both must be symmetric sets of 2n conditions, independent
// modulo the minimal domain (checked when both parameters are positive;
// undecidable in the closed term algebra otherwise), and each member of one
// set must satisfy every condition of the other.  Preconditions failing
// throw PreconditionViolated.
bool domain_equal(const BoundaryConditionSet& w1, const BoundaryConditionSet& w2, const Params& p);

// Exact 2n x 2n matrix over Q(i) meant to be unitary.
struct ExtensionMatrix {
    std::vector<std::vector<GaussianRational>> u;

    static ExtensionMatrix identity(long size);
    bool is_unitary() const;
};

// The canonical symplectic defect basis at one endpoint: n pairs (p_i, q_i)
// of real coefficient vectors over phi_0..phi_{n-1}, psi_0..psi_{n-1} with
// boundary form [p_i, q_j] = delta_ij and all other pairings zero.  From a
// pair the complex combinations p_i -/+ i q_i have boundary-form gram
// exactly +/- 2i, which is what makes the unitary parametrization below
// exact, with no square roots and hence no departure from the scalar field.
struct SymplecticBasis {
    std::vector<BoundaryCondition> positive;  // gram 2i * I_n
    std::vector<BoundaryCondition> negative;  // gram -2i * I_n, cross-gram 0
};

SymplecticBasis canonical_defect_basis(long n, Endpoint side, const Params& p);

// Self-adjoint extension from an exact unitary: with the positive canonical
// basis e = (+1 side then -1 side) and the negative basis ebar ordered
// crosswise (-1 side then +1 side), returns the 2n combined conditions
//   psi_j = e_j + sum_k U_{kj} ebar_k.
// For the identity matrix each +1-side element is paired with its -1-side
// counterpart.  The returned set passes glazman_symmetry_check for every
// exact unitary U; a non-unitary matrix throws NotUnitary.  Requires
// alpha, beta > 0.
BoundaryConditionSet extension_from_unitary(const ExtensionMatrix& u, const Params& p);

} // namespace jacobi
