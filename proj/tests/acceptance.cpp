// Acceptance harness: nine independently timed end-to-end checks covering the
// whole toolkit.  Each criterion prints exactly one PASS/FAIL line with its
// wall time; the process exits nonzero when any criterion fails.  Tolerances
// and runtime targets are pinned in the criterion functions.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "jacobi/domains.hpp"
#include "jacobi/gkn.hpp"
#include "jacobi/numerics.hpp"

using namespace jacobi;

namespace {

struct CriterionResult {
    bool pass = true;
    std::string detail;  // appended to the status line (counts, logged notes)
};

void note(CriterionResult& r, const std::string& s) {
    if (!r.detail.empty()) r.detail += "; ";
    r.detail += s;
}

void fail(CriterionResult& r, const std::string& s) {
    r.pass = false;
    note(r, s);
}

const std::vector<Params> kParamTrio = {
    Params{Rational(1, 2), Rational(2, 5)},
    Params{Rational(1, 3), Rational(1, 5)},
    Params{Rational(3, 4), Rational(1, 2)},
};

std::string show(const Params& p) {
    std::ostringstream os;
    os << "(" << p.alpha.str() << "," << p.beta.str() << ")";
    return os.str();
}

// 1. The n-fold composition has every Jacobi polynomial as an exact
//    eigenfunction with eigenvalue (m(m+alpha+beta+1))^n.
CriterionResult criterion_eigenvalue() {
    CriterionResult r;
    long checked = 0;
    for (const Rational& a : {Rational(1, 3), Rational(1, 2), Rational(2, 5)})
        for (const Rational& b : {Rational(1, 5), Rational(1, 2), Rational(3, 4)}) {
            const Params p{a, b};
            for (long m = 0; m <= 10; ++m) {
                const TermFunction pm = jacobi_poly(m, p);
                Rational lam_pow(1);
                for (long n = 1; n <= 3; ++n) {
                    lam_pow = lam_pow * eigenvalue(m, p);
                    const TermFunction lhs = apply_ln_composed(pm, n, p);
                    const TermFunction rhs = scale(pm, GaussianRational(lam_pow));
                    ++checked;
                    if (!equal(lhs, rhs)) {
                        fail(r, "residual nonzero at " + show(p) + " m=" + std::to_string(m) +
                                    " n=" + std::to_string(n));
                        return r;
                    }
                }
            }
        }
    note(r, std::to_string(checked) + " exact identities");
    return r;
}

// 2. The derived symmetric (Lagrangian) form reproduces the composition
//    exactly on a function family spanning both endpoint behaviors.
CriterionResult criterion_symmetric_form() {
    CriterionResult r;
    const Params p{Rational(1, 2), Rational(2, 5)};
    long checked = 0;
    for (long n = 1; n <= 4; ++n) {
        const SymmetricForm form = derive_symmetric_coefficients(n, p);
        if (!(form.C.back() == Rational(1))) {
            fail(r, "leading coefficient differs from 1 at n=" + std::to_string(n));
            return r;
        }
        std::vector<TermFunction> family;
        for (long j = 0; j <= 2 * n + 2; ++j) {
            family.push_back(tf_from_global({Term(GaussianRational(Rational(1)), Rational(j), Rational(0))}));
            family.push_back(tf_from_global({Term(GaussianRational(Rational(1)), Rational(0), Rational(j))}));
        }
        for (auto [i, j] : {std::pair<long, long>{1, 1}, {2, 3}, {3, 2}})
            family.push_back(tf_from_global({Term(GaussianRational(Rational(1)), Rational(i), Rational(j))}));
        for (long j = 0; j < 2; ++j) {
            family.push_back(psi(j, Endpoint::PlusOne, p));
            family.push_back(psi(j, Endpoint::MinusOne, p));
        }
        for (const TermFunction& f : family) {
            ++checked;
            if (!equal(apply_ln_symmetric(f, form, p), apply_ln_composed(f, n, p))) {
                fail(r, "disagreement at n=" + std::to_string(n));
                return r;
            }
        }
    }
    // Classical cross-check: for the parameter-free case the first derived
    // weight of the square is the textbook value 2.
    const SymmetricForm legendre = derive_symmetric_coefficients(2, Params{Rational(0), Rational(0)});
    if (!(legendre.C[0] == Rational(2))) {
        fail(r, "square of the parameter-free expression has wrong first weight");
        return r;
    }
    note(r, std::to_string(checked) + " exact agreements, n <= 4");
    return r;
}

// 3. The endpoint pairing matrix of the defect comparison functions has the
//    proven block structure and full rank 2n.
CriterionResult criterion_pairing_structure() {
    CriterionResult r;
    long checked = 0;
    for (const Params& p : kParamTrio)
        for (long n = 1; n <= 4; ++n)
            for (Endpoint side : {Endpoint::PlusOne, Endpoint::MinusOne}) {
                const AMatrix m = build_pairing_matrix(n, side, p);
                for (long s = 0; s < n; ++s)
                    for (long t = 0; t < n; ++t) {
                        if (!m[s][t].is_zero())
                            fail(r, "phi-phi entry nonzero at " + show(p) + " n=" + std::to_string(n));
                        if (s + t >= n && !m[s][n + t].is_zero())
                            fail(r, "phi-psi entry nonzero in the vanishing band at " + show(p));
                        ++checked;
                    }
                for (long y = 0; y < n; ++y)
                    if (m[y][n + (n - 1 - y)].is_zero())
                        fail(r, "antidiagonal pairing vanishes at " + show(p) + " n=" + std::to_string(n));
                if (exact_rank(m) != 2 * n)
                    fail(r, "rank defect at " + show(p) + " n=" + std::to_string(n));
                if (!r.pass) return r;
            }
    note(r, std::to_string(checked) + " block entries, n <= 4, both endpoints");
    return r;
}

// 4. First-kind solutions enter the minimal domain exactly at index n;
//    second-kind solutions never do below n.
CriterionResult criterion_minimal_ladder() {
    CriterionResult r;
    const Params p{Rational(1, 2), Rational(2, 5)};
    for (long n = 1; n <= 3; ++n)
        for (Endpoint side : {Endpoint::PlusOne, Endpoint::MinusOne}) {
            for (long j = 0; j < n + 3; ++j) {
                const bool expect = j >= n;
                if (in_minimal(phi(j, side), n, p) != expect)
                    fail(r, "first-kind membership wrong at n=" + std::to_string(n) +
                                " j=" + std::to_string(j));
            }
            for (long j = 0; j < n; ++j)
                if (in_minimal(psi(j, side, p), n, p))
                    fail(r, "second-kind function below n claimed minimal at n=" + std::to_string(n));
            if (!r.pass) return r;
        }
    note(r, "membership ladder exact for n <= 3, both endpoints");
    return r;
}

// 5. Any n distinct polynomial degrees impose the same self-adjoint
//    restriction as the first n, including the parameter-free special case.
CriterionResult criterion_domain_equality() {
    CriterionResult r;
    std::mt19937_64 rng(20260822);
    std::uniform_int_distribution<long> dist(0, 12);
    long checked = 0;
    for (const Params& p : kParamTrio)
        for (long n = 1; n <= 3; ++n) {
            BoundaryConditionSet base;
            base.n = n;
            for (long m = 0; m < n; ++m)
                base.conditions.push_back(
                    BoundaryCondition::single("P:" + std::to_string(m), jacobi_poly(m, p)));
            for (int trial = 0; trial < 5; ++trial) {
                std::set<long> degrees;
                while (degrees.size() < static_cast<std::size_t>(n)) degrees.insert(dist(rng));
                BoundaryConditionSet other;
                other.n = n;
                for (long m : degrees)
                    other.conditions.push_back(
                        BoundaryCondition::single("P:" + std::to_string(m), jacobi_poly(m, p)));
                ++checked;
                if (!domain_equal(base, other, p)) {
                    std::string ds;
                    for (long m : degrees) ds += std::to_string(m) + " ";
                    fail(r, "restriction differs for degrees { " + ds + "} at " + show(p) +
                                " n=" + std::to_string(n));
                    return r;
                }
            }
        }
    // Parameter-free specialization at n = 1: the constant condition is
    // equivalent to any single polynomial condition.
    const Params flat{Rational(0), Rational(0)};
    BoundaryConditionSet ones;
    ones.n = 1;
    ones.conditions.push_back(BoundaryCondition::single(
        "1", tf_from_global({Term(GaussianRational(Rational(1)), Rational(0), Rational(0))})));
    for (long m = 0; m <= 8; ++m) {
        BoundaryConditionSet pm;
        pm.n = 1;
        pm.conditions.push_back(
            BoundaryCondition::single("P:" + std::to_string(m), jacobi_poly(m, flat)));
        ++checked;
        if (!domain_equal(ones, pm, flat)) {
            fail(r, "parameter-free case differs at m=" + std::to_string(m));
            return r;
        }
    }
    note(r, std::to_string(checked) + " equal restriction pairs");
    return r;
}

// 6. The four left-definite membership characterizations agree on the
//    standard catalog; separations of the literal top-derivative condition
//    from the derivative ladder are reported, not failed.
CriterionResult criterion_leftdef_agreement() {
    CriterionResult r;
    const std::vector<Params> grid = {
        Params{Rational(1, 3), Rational(1, 5)},
        Params{Rational(1, 2), Rational(1, 2)},
        Params{Rational(2, 5), Rational(3, 4)},
        Params{Rational(4, 5), Rational(1, 10)},
    };
    long checked = 0, separations = 0;
    for (const Params& p : grid)
        for (long n = 1; n <= 3; ++n)
            for (const CatalogEntry& e : standard_catalog(n, 3, 6, p)) {
                const LeftDefFlags fl = leftdef_membership(e.fn, n, p);
                ++checked;
                if (!(fl.B == fl.F && fl.F == fl.LW)) {
                    fail(r, "characterizations B/F/LW disagree on " + e.name + " at " + show(p) +
                                " n=" + std::to_string(n));
                    return r;
                }
                if (fl.A != fl.LW) ++separations;
            }
    note(r, std::to_string(checked) + " catalog memberships");
    if (separations > 0)
        note(r, std::to_string(separations) +
                    " top-derivative separations logged (weaker literal condition on "
                    "inverse-power germs)");
    return r;
}

// 7. Quadrature reproduces the integrated-by-parts identity on interior
//    intervals to high relative precision.
CriterionResult criterion_green_identity() {
    CriterionResult r;
    const Params p{Rational(1, 2), Rational(2, 5)};
    QuadratureSpec spec;
    spec.lo = Rational(-9, 10);
    spec.hi = Rational(9, 10);
    spec.precision_bits = 256;
    spec.target_rel_error = 1e-16;
    spec.max_subdivisions = 14;

    std::vector<CatalogEntry> withglobal;
    for (const CatalogEntry& e : standard_catalog(2, 3, 6, p))
        if (e.fn.global_terms) withglobal.push_back(e);
    if (withglobal.size() < 6) {
        fail(r, "catalog has too few globally represented functions");
        return r;
    }
    long checked = 0;
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        const CatalogEntry& f = withglobal[i % withglobal.size()];
        const CatalogEntry& g = withglobal[(i + 3) % withglobal.size()];
        const long n = 1 + (i % 2);
        const GreenReport rep = green_identity_check(f.fn, g.fn, n, spec, p);
        const double rel = rep.relative.to_double();
        worst = std::max(worst, rel);
        ++checked;
        if (!(rel < 1e-9)) {
            fail(r, "identity residual " + std::to_string(rel) + " for " + f.name + "," + g.name +
                        " n=" + std::to_string(n));
            return r;
        }
    }
    std::ostringstream os;
    os << checked << " pairs, worst relative residual " << worst;
    note(r, os.str());
    return r;
}

// 8. The floating-point limit probe agrees with the exact endpoint engine on
//    every pairing from criterion 3 at n <= 2, including the pinned value
//    -alpha * 2^(beta+1) for the first defect pair.
CriterionResult criterion_limit_probe() {
    CriterionResult r;
    const std::vector<long> ks = {8, 12, 16, 20, 24, 28, 32};
    const mpfr_prec_t prec = 320;
    long checked = 0;
    for (const Params& p : kParamTrio)
        for (long n = 1; n <= 2; ++n)
            for (Endpoint side : {Endpoint::PlusOne, Endpoint::MinusOne}) {
                std::vector<TermFunction> basis;
                for (long j = 0; j < n; ++j) basis.push_back(phi(j, side));
                for (long j = 0; j < n; ++j) basis.push_back(psi(j, side, p));
                for (long s = 0; s < n; ++s)
                    for (std::size_t t = 0; t < basis.size(); ++t) {
                        const TermFunction expr =
                            sesqui_form_expression(basis[s], basis[t], n, p);
                        const SesquiResult exact = sesqui_eval(basis[s], basis[t], n, p);
                        const LimitClass& cls =
                            side == Endpoint::PlusOne ? exact.at_plus : exact.at_minus;
                        const ProbeReport probe = limit_probe(expr, side, p, ks, prec);
                        ++checked;
                        if (probe.tag != cls.tag) {
                            fail(r, "classification mismatch at " + show(p) +
                                        " n=" + std::to_string(n));
                            return r;
                        }
                        if (cls.tag == LimTag::Finite) {
                            const BigFloat target = embed_real(cls.value, prec);
                            const BigFloat diff = probe.value.re - target;
                            if (!(std::fabs(diff.to_double()) < 1e-10 &&
                                  std::fabs(probe.value.im.to_double()) < 1e-10)) {
                                fail(r, "limit value off at " + show(p) + " n=" + std::to_string(n));
                                return r;
                            }
                        }
                    }
            }
    // Pinned regression.
    const Params p0{Rational(1, 2), Rational(2, 5)};
    const TermFunction expr =
        sesqui_form_expression(phi(0, Endpoint::PlusOne), psi(0, Endpoint::PlusOne, p0), 1, p0);
    const ProbeReport probe = limit_probe(expr, Endpoint::PlusOne, p0, ks, prec);
    const AlgebraicValue pinned =
        AlgebraicValue::monomial(GaussianRational(Rational(-1, 2)), Rational(7, 5));
    if (probe.tag != LimTag::Finite ||
        !(std::fabs((probe.value.re - embed_real(pinned, prec)).to_double()) < 1e-10)) {
        fail(r, "pinned first-pair value not recovered");
        return r;
    }
    note(r, std::to_string(checked) + " probed pairings plus the pinned first-pair value");
    return r;
}

// 9. The order-n inner product of an eigenpolynomial with itself equals the
//    n-th eigenvalue power times its plain norm, on intervals approaching the
//    full support.
CriterionResult criterion_leftdef_inner() {
    CriterionResult r;
    const Params p{Rational(1, 2), Rational(2, 5)};
    long checked = 0;
    double worst = 0.0;
    for (long j : {1L, 2L, 3L}) {
        // Interval [-1 + 10^-j, 1 - 10^-j].
        Rational margin(1, 1);
        for (long q = 0; q < j; ++q) margin = margin / Rational(10);
        QuadratureSpec spec;
        spec.lo = Rational(-1) + margin;
        spec.hi = Rational(1) - margin;
        spec.precision_bits = 256;
        spec.target_rel_error = 1e-18;
        spec.max_subdivisions = 14;
        for (long m : {1L, 2L, 3L}) {
            const TermFunction pm = jacobi_poly(m, p);
            Rational lam_pow(1);
            for (long n = 1; n <= 2; ++n) {
                lam_pow = lam_pow * eigenvalue(m, p);
                const BigFloat lhs = leftdef_inner(pm, pm, n, spec, p);
                const BigFloat plain = weighted_integral(pm, pm, spec, p);
                const BigFloat rhs = embed_real(AlgebraicValue(GaussianRational(lam_pow)),
                                                spec.precision_bits) *
                                     plain;
                const double rel = std::fabs((lhs - rhs).to_double()) / std::fabs(lhs.to_double());
                worst = std::max(worst, rel);
                ++checked;
                if (!(rel < 1e-8)) {
                    fail(r, "inner product mismatch at m=" + std::to_string(m) +
                                " n=" + std::to_string(n) + " margin 10^-" + std::to_string(j));
                    return r;
                }
            }
        }
    }
    std::ostringstream os;
    os << checked << " inner products, worst relative error " << worst;
    note(r, os.str());
    return r;
}

struct Criterion {
    const char* name;
    double budget_seconds;
    CriterionResult (*run)();
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"eigenvalue identity for all polynomial degrees", 5.0, criterion_eigenvalue},
        {"symmetric form agrees with the composition", 10.0, criterion_symmetric_form},
        {"defect pairing matrix structure and rank", 30.0, criterion_pairing_structure},
        {"minimal domain entry ladder", 10.0, criterion_minimal_ladder},
        {"polynomial boundary conditions give one restriction", 20.0, criterion_domain_equality},
        {"left-definite characterizations agree", 30.0, criterion_leftdef_agreement},
        {"integration by parts closes numerically", 60.0, criterion_green_identity},
        {"numeric limit probe matches the exact engine", 30.0, criterion_limit_probe},
        {"higher-order inner product scales by eigenvalue powers", 60.0, criterion_leftdef_inner},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        CriterionResult res;
        try {
            res = criteria[i].run();
        } catch (const std::exception& e) {
            res.pass = false;
            res.detail = std::string("unexpected exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > criteria[i].budget_seconds) {
            res.pass = false;
            note(res, "runtime " + std::to_string(secs) + "s exceeds budget " +
                          std::to_string(criteria[i].budget_seconds) + "s");
        }
        std::printf("%s criterion %zu: %s (%.2fs)%s%s\n", res.pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].name, secs, res.detail.empty() ? "" : " -- ",
                    res.detail.c_str());
        std::fflush(stdout);
        if (!res.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
