#include "jacobi/catalog.hpp"

namespace jacobi {

TermFunction phi(long j, Endpoint side) {
    if (j < 0) throw PreconditionViolated("phi index must be nonnegative");
    TermList t;
    if (side == Endpoint::PlusOne) {
        t.emplace_back(GaussianRational(Rational(1)), Rational(j), Rational(0));
        return tf_from_germs({}, std::move(t));
    }
    t.emplace_back(GaussianRational(Rational(1)), Rational(0), Rational(j));
    return tf_from_germs(std::move(t), {});
}

TermFunction psi(long j, Endpoint side, const Params& p) {
    if (j < 0) throw PreconditionViolated("psi index must be nonnegative");
    if (side == Endpoint::PlusOne) {
        if (p.alpha.is_zero())
            throw DegenerateParameter("psi at +1 needs alpha > 0; the second solution is logarithmic at alpha = 0");
        TermList t;
        t.emplace_back(GaussianRational(Rational(1)), -p.alpha + Rational(j), Rational(0));
        return tf_from_germs({}, std::move(t));
    }
    if (p.beta.is_zero())
        throw DegenerateParameter("psi at -1 needs beta > 0; the second solution is logarithmic at beta = 0");
    TermList t;
    t.emplace_back(GaussianRational(Rational(1)), Rational(0), -p.beta + Rational(j));
    return tf_from_germs(std::move(t), {});
}

namespace {

// Exact re-expansion of a polynomial in (1-x) powers into (1+x) powers via
// (1-x)^j = (2 - (1+x))^j; requires integer exponents.
TermList re_expand_at_minus(const TermList& plus_form) {
    TermList out;
    for (const auto& t : plus_form) {
        if (!t.a.is_integer() || !t.b.is_zero() || t.a.sign() < 0)
            throw PreconditionViolated("re-expansion needs a polynomial in (1-x)");
        const long j = static_cast<long>(t.a.num().get_si());
        for (long i = 0; i <= j; ++i) {
            Rational c = binomial_rational(j, i) * Rational(2).pow_int(j - i);
            if (i % 2 != 0) c = -c;
            out.emplace_back(t.coeff * GaussianRational(c), Rational(0), Rational(i));
        }
    }
    return collect(std::move(out));
}

} // namespace

TermFunction jacobi_poly(long m, const Params& p) {
    if (m < 0) throw PreconditionViolated("polynomial degree must be nonnegative");
    TermList plus_form;
    const Rational mabp1 = Rational(m) + p.alpha + p.beta + Rational(1);
    for (long j = 0; j <= m; ++j) {
        Rational c = Rational(-1, 2).pow_int(j);
        c *= rising_factorial(mabp1, j);
        c *= rising_factorial(p.alpha + Rational(j) + Rational(1), m - j);
        c /= factorial_rational(j) * factorial_rational(m - j);
        plus_form.emplace_back(GaussianRational(c), Rational(j), Rational(0));
    }
    plus_form = collect(std::move(plus_form));
    TermFunction f;
    f.germ_plus = make_germ(Endpoint::PlusOne, plus_form);
    f.germ_minus = make_germ(Endpoint::MinusOne, re_expand_at_minus(plus_form));
    f.global_terms = std::move(plus_form);
    return f;
}

Rational eigenvalue(long m, const Params& p) {
    return Rational(m) * (Rational(m) + p.alpha + p.beta + Rational(1));
}

namespace {

// Truncated hypergeometric sum  sum_{j<=T} (u)_j (v)_j / ((w)_j j!) z^j  in
// the variable z = (1 -/+ x)/2, emitted as endpoint powers with the 1/2^j
// folded into coefficients and an overall power offset added.
TermList hypergeometric_truncation(const Rational& u, const Rational& v, const Rational& w,
                                   Endpoint side, long trunc, const Rational& offset) {
    TermList out;
    for (long j = 0; j <= trunc; ++j) {
        const Rational wj = rising_factorial(w, j);
        if (wj.is_zero())
            throw DegenerateParameter("hypergeometric lower parameter hits a nonpositive integer");
        Rational c = rising_factorial(u, j) * rising_factorial(v, j) / (wj * factorial_rational(j));
        c *= Rational(1, 2).pow_int(j);
        if (c.is_zero()) continue;  // terminating series
        const Rational e = Rational(j) + offset;
        if (side == Endpoint::PlusOne)
            out.emplace_back(GaussianRational(c), e, Rational(0));
        else
            out.emplace_back(GaussianRational(c), Rational(0), e);
    }
    return collect(std::move(out));
}

} // namespace

LocalSolutions local_solution_germs(const Rational& mu, Endpoint side, long truncation_order,
                                    const Params& p) {
    if (truncation_order < 0) throw PreconditionViolated("truncation order must be nonnegative");
    // Endpoint roles swap alpha and beta; the indicial exponents are 0 and
    // -alpha at +1 (resp. 0 and -beta at -1).
    const Rational& a = side == Endpoint::PlusOne ? p.alpha : p.beta;
    const Rational& b = side == Endpoint::PlusOne ? p.beta : p.alpha;
    if (a.is_zero())
        throw DegenerateParameter("second-kind local solution needs a positive endpoint parameter");
    const Rational s = p.alpha + p.beta + Rational(1);
    LocalSolutions out;
    out.first_kind = make_germ(side,
        hypergeometric_truncation(-mu, mu + s, a + Rational(1), side, truncation_order, Rational(0)));
    out.second_kind = make_germ(side,
        hypergeometric_truncation(-mu - a, mu + b + Rational(1), Rational(1) - a, side,
                                  truncation_order, -a));
    return out;
}

std::vector<CatalogEntry> defect_basis(long n, const Params& p) {
    std::vector<CatalogEntry> out;
    out.reserve(4 * n);
    for (Endpoint side : {Endpoint::PlusOne, Endpoint::MinusOne}) {
        const std::string suffix = side == Endpoint::PlusOne ? "+" : "-";
        for (long j = 0; j < n; ++j)
            out.push_back({"phi" + suffix + ":" + std::to_string(j), phi(j, side)});
        for (long j = 0; j < n; ++j)
            out.push_back({"psi" + suffix + ":" + std::to_string(j), psi(j, side, p)});
    }
    return out;
}

std::vector<CatalogEntry> standard_catalog(long n, long extra, long max_poly_degree, const Params& p) {
    std::vector<CatalogEntry> out;
    for (Endpoint side : {Endpoint::PlusOne, Endpoint::MinusOne}) {
        const std::string suffix = side == Endpoint::PlusOne ? "+" : "-";
        const Rational& a = side == Endpoint::PlusOne ? p.alpha : p.beta;
        for (long j = 0; j < n + extra; ++j)
            out.push_back({"phi" + suffix + ":" + std::to_string(j), phi(j, side)});
        if (!a.is_zero())
            for (long j = 0; j < n + extra; ++j)
                out.push_back({"psi" + suffix + ":" + std::to_string(j), psi(j, side, p)});
    }
    for (long m = 0; m <= max_poly_degree; ++m)
        out.push_back({"P:" + std::to_string(m), jacobi_poly(m, p)});
    return out;
}

} // namespace jacobi
