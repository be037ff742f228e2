#include "doctest.h"

#include "jacobi/catalog.hpp"
#include "jacobi/errors.hpp"
#include "jacobi/operator.hpp"

using namespace jacobi;

namespace {

const Params kP{Rational(1, 2), Rational(2, 5)};
const Params kLegendre{Rational(0), Rational(0)};

AlgebraicValue alg(const Rational& r) { return AlgebraicValue(GaussianRational(r)); }

} // namespace

TEST_CASE("comparison germs live on one side only") {
    const TermFunction f = phi(2, Endpoint::PlusOne);
    CHECK(f.germ_minus.terms.empty());
    REQUIRE(f.germ_plus.terms.size() == 1);
    CHECK(f.germ_plus.terms[0].a == Rational(2));
    CHECK(f.germ_plus.terms[0].b == Rational(0));
    CHECK_FALSE(f.global_terms.has_value());

    const TermFunction g = psi(1, Endpoint::MinusOne, kP);
    CHECK(g.germ_plus.terms.empty());
    REQUIRE(g.germ_minus.terms.size() == 1);
    CHECK(g.germ_minus.terms[0].b == -kP.beta + Rational(1));

    CHECK_THROWS_AS(phi(-1, Endpoint::PlusOne), PreconditionViolated);
}

TEST_CASE("inverse-power germs refuse degenerate endpoint parameters") {
    const Params no_alpha{Rational(0), Rational(2, 5)};
    CHECK_THROWS_AS(psi(0, Endpoint::PlusOne, no_alpha), DegenerateParameter);
    CHECK_NOTHROW(psi(0, Endpoint::MinusOne, no_alpha));
    const Params no_beta{Rational(1, 2), Rational(0)};
    CHECK_THROWS_AS(psi(0, Endpoint::MinusOne, no_beta), DegenerateParameter);
}

TEST_CASE("legendre polynomials satisfy the classical three-term recurrence") {
    // x as a global term list: 1 - (1-x).
    TermList x_terms{Term(GaussianRational(Rational(1)), Rational(0), Rational(0)),
                     Term(GaussianRational(Rational(-1)), Rational(1), Rational(0))};
    for (long m = 1; m <= 8; ++m) {
        const TermList pm1 = *jacobi_poly(m + 1, kLegendre).global_terms;
        const TermList pm = *jacobi_poly(m, kLegendre).global_terms;
        const TermList pm0 = *jacobi_poly(m - 1, kLegendre).global_terms;
        // (m+1) P_{m+1} - (2m+1) x P_m + m P_{m-1} = 0
        TermList resid = scale(pm1, GaussianRational(Rational(m + 1)));
        resid = add(resid, scale(mul(x_terms, pm), GaussianRational(Rational(-(2 * m + 1)))));
        resid = add(resid, scale(pm0, GaussianRational(Rational(m))));
        CAPTURE(m);
        CHECK(is_zero(resid));
    }
}

TEST_CASE("eigenpolynomial endpoint values match the closed forms") {
    for (long m = 0; m <= 6; ++m) {
        const TermFunction pm = jacobi_poly(m, kP);
        // Value at +1: rising_factorial(alpha+1, m) / m!.
        const Rational at_plus = rising_factorial(kP.alpha + Rational(1), m) / factorial_rational(m);
        CHECK(limit_classify(pm.germ_plus) == LimitClass::finite(alg(at_plus)));
        // Value at -1: (-1)^m rising_factorial(beta+1, m) / m!.
        Rational at_minus = rising_factorial(kP.beta + Rational(1), m) / factorial_rational(m);
        if (m % 2 != 0) at_minus = -at_minus;
        CHECK(limit_classify(pm.germ_minus) == LimitClass::finite(alg(at_minus)));
    }
}

TEST_CASE("parameter swap mirrors the eigenpolynomials") {
    // P_m with (alpha, beta) evaluated toward -1 equals (-1)^m times P_m with
    // (beta, alpha) evaluated toward +1, exponent for exponent.
    const Params swapped{kP.beta, kP.alpha};
    for (long m = 0; m <= 6; ++m) {
        const TermFunction lhs = jacobi_poly(m, kP);
        const TermFunction rhs = jacobi_poly(m, swapped);
        TermList mirrored;
        for (const auto& t : rhs.germ_plus.terms) {
            GaussianRational c = t.coeff;
            if (m % 2 != 0) c = -c;
            mirrored.emplace_back(c, t.b, t.a);  // (1-x)^a -> (1+x)^a
        }
        CAPTURE(m);
        CHECK(equal(lhs.germ_minus.terms, mirrored));
    }
}

TEST_CASE("eigenvalues follow the quadratic index law") {
    CHECK(eigenvalue(0, kP) == Rational(0));
    CHECK(eigenvalue(1, kP) == kP.alpha + kP.beta + Rational(2));
    CHECK(eigenvalue(4, kP) == Rational(4) * (Rational(4) + kP.alpha + kP.beta + Rational(1)));
}

TEST_CASE("first-kind local solution terminates onto the eigenpolynomial") {
    // At integer index the series terminates; it is the eigenpolynomial
    // divided by its value at the endpoint.
    for (long m : {0L, 2L, 5L}) {
        const LocalSolutions loc = local_solution_germs(Rational(m), Endpoint::PlusOne, m + 4, kP);
        const Rational value_at_one =
            rising_factorial(kP.alpha + Rational(1), m) / factorial_rational(m);
        const TermList expect = scale(jacobi_poly(m, kP).germ_plus.terms,
                                      GaussianRational(Rational(1) / value_at_one));
        CAPTURE(m);
        CHECK(equal(loc.first_kind.terms, expect));
    }
}

TEST_CASE("local solutions satisfy the eigenequation to truncation order") {
    const long T = 6;
    for (Endpoint side : {Endpoint::PlusOne, Endpoint::MinusOne}) {
        for (const Rational& mu : {Rational(1, 3), Rational(7, 2)}) {
            const LocalSolutions loc = local_solution_germs(mu, side, T, kP);
            const Rational lambda = mu * (mu + kP.alpha + kP.beta + Rational(1));
            const Rational indicial = side == Endpoint::PlusOne ? kP.alpha : kP.beta;
            struct Case { const Germ* g; Rational floor; };
            const Case cases[] = {{&loc.first_kind, Rational(T)},
                                  {&loc.second_kind, Rational(T) - indicial}};
            for (const auto& c : cases) {
                TermFunction f = side == Endpoint::PlusOne ? tf_from_germs({}, c.g->terms)
                                                           : tf_from_germs(c.g->terms, {});
                TermFunction resid = add(apply_l(f, kP), scale(f, GaussianRational(-lambda)));
                const Germ& rg = side == Endpoint::PlusOne ? resid.germ_plus : resid.germ_minus;
                // Canonical form is a power series in the (1-x) exponent, so
                // mirror the -1 germ first to make its controlling exponent
                // the preserved one.  Everything below the truncation frontier
                // must cancel exactly.
                TermList oriented;
                for (const auto& t : rg.terms)
                    oriented.emplace_back(t.coeff, side == Endpoint::PlusOne ? t.a : t.b,
                                          side == Endpoint::PlusOne ? t.b : t.a);
                for (const auto& t : canonicalize(oriented)) {
                    CAPTURE(mu);
                    CHECK(t.a >= c.floor);
                }
            }
        }
    }
}

TEST_CASE("second-kind local solution leads with coefficient one") {
    const LocalSolutions loc = local_solution_germs(Rational(1, 3), Endpoint::PlusOne, 4, kP);
    REQUIRE_FALSE(loc.second_kind.terms.empty());
    // Germ term order puts the controlling exponent first.
    const Term& lead = loc.second_kind.terms.front();
    CHECK(lead.a == -kP.alpha);
    CHECK(lead.coeff == GaussianRational(Rational(1)));
    CHECK(leading_exponent(loc.second_kind) == -kP.alpha);

    CHECK_THROWS_AS(local_solution_germs(Rational(1, 3), Endpoint::PlusOne, 4, kLegendre),
                    DegenerateParameter);
    CHECK_THROWS_AS(local_solution_germs(Rational(1, 3), Endpoint::PlusOne, -1, kP),
                    PreconditionViolated);
}

TEST_CASE("defect collection is ordered plus-side first, powers before inverse powers") {
    const auto basis = defect_basis(2, kP);
    REQUIRE(basis.size() == 8);
    const char* names[] = {"phi+:0", "phi+:1", "psi+:0", "psi+:1",
                           "phi-:0", "phi-:1", "psi-:0", "psi-:1"};
    for (std::size_t i = 0; i < 8; ++i) CHECK(basis[i].name == names[i]);
    CHECK(equal(basis[1].fn, phi(1, Endpoint::PlusOne)));
    CHECK(equal(basis[6].fn, psi(0, Endpoint::MinusOne, kP)));
}

TEST_CASE("verification sample drops inverse powers at a degenerate endpoint") {
    const Params no_beta{Rational(1, 2), Rational(0)};
    const auto cat = standard_catalog(2, 1, 3, no_beta);
    // 3 phi+ + 3 psi+ + 3 phi- + 0 psi- + 4 polynomials.
    CHECK(cat.size() == 13);
    for (const auto& e : cat) CHECK(e.name.find("psi-") == std::string::npos);

    const auto full = standard_catalog(1, 0, 2, kP);
    // 1 of each germ family on each side + 3 polynomials.
    CHECK(full.size() == 7);
    CHECK(full.back().name == "P:2");
}
