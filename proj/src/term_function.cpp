#include "jacobi/term_function.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace jacobi {

Germ make_germ(Endpoint e, TermList terms) {
    terms = collect(std::move(terms));  // canonical (a, b) order, zeros gone
    if (e == Endpoint::MinusOne) {
        std::stable_sort(terms.begin(), terms.end(), [](const Term& s, const Term& t) {
            return std::tie(s.b, s.a) < std::tie(t.b, t.a);
        });
    }
    return Germ{e, std::move(terms)};
}

LimitClass LimitClass::finite(AlgebraicValue v) {
    if (v.is_zero()) return zero();
    return {LimTag::Finite, std::move(v)};
}

std::optional<Rational> leading_exponent(const Germ& g) {
    if (g.terms.empty()) return std::nullopt;
    return g.endpoint == Endpoint::PlusOne ? g.terms.front().a : g.terms.front().b;
}

namespace {

// Generalized binomial coefficient (b choose m) for rational b.
Rational general_binomial(const Rational& b, long m) {
    Rational out(1);
    for (long i = 0; i < m; ++i) out *= (b - Rational(i)) / Rational(i + 1);
    return out;
}

// Exact expansion of the germ in the endpoint distance t (t = 1-x at +1,
// t = 1+x at -1): each term c t^e (2-t)^s expands as
//   sum_m c (s choose m) (-1)^m 2^{s-m} t^{e+m},
// and the totals at every exponent <= bound are collected.  Distinct
// controlling exponents can interfere through the (2-t)^s factors (their
// 2^s-weighted sums may cancel), so sign and integrability decisions below
// a finite threshold must look at these totals rather than at raw leading
// exponents.  Zero totals are dropped.
std::map<Rational, AlgebraicValue> endpoint_expansion(const Germ& g, const Rational& bound) {
    const bool plus = g.endpoint == Endpoint::PlusOne;
    std::map<Rational, AlgebraicValue> totals;
    for (const auto& t : g.terms) {
        const Rational& e = plus ? t.a : t.b;
        const Rational& s = plus ? t.b : t.a;
        for (long m = 0; Rational(m) + e <= bound; ++m) {
            const Rational c = general_binomial(s, m) * (m % 2 == 0 ? Rational(1) : Rational(-1));
            totals[e + Rational(m)] += AlgebraicValue::monomial(t.coeff * GaussianRational(c), s - Rational(m));
        }
    }
    std::erase_if(totals, [](const auto& kv) { return kv.second.is_zero(); });
    return totals;
}

} // namespace

LimitClass limit_classify(const Germ& g) {
    if (g.terms.empty()) return LimitClass::zero();
    const bool plus = g.endpoint == Endpoint::PlusOne;
    const Rational lead = plus ? g.terms.front().a : g.terms.front().b;
    if (lead.sign() > 0) return LimitClass::zero();
    if (lead.sign() == 0) {
        // No negative exponents: the exponent-zero terms carry the limit,
        // each contributing coeff * 2^(other exponent).
        AlgebraicValue v;
        for (const auto& t : g.terms) {
            const Rational& e = plus ? t.a : t.b;
            if (e.sign() != 0) break;  // sorted ascending in the controlling exponent
            v += AlgebraicValue::monomial(t.coeff, plus ? t.b : t.a);
        }
        return LimitClass::finite(std::move(v));
    }
    // Negative leading exponent: expand down to order zero and let the exact
    // totals decide whether the divergent part genuinely survives.
    auto totals = endpoint_expansion(g, Rational(0));
    AlgebraicValue at_zero;
    for (auto& [e, v] : totals) {
        if (e.sign() < 0) return LimitClass::infinite();
        at_zero = std::move(v);  // only e == 0 can remain
    }
    return LimitClass::finite(std::move(at_zero));
}

TermFunction tf_from_global(TermList terms) {
    terms = collect(std::move(terms));
    TermFunction f;
    f.germ_minus = make_germ(Endpoint::MinusOne, terms);
    f.germ_plus = make_germ(Endpoint::PlusOne, terms);
    f.global_terms = std::move(terms);
    return f;
}

TermFunction tf_from_germs(TermList minus_terms, TermList plus_terms) {
    TermFunction f;
    f.germ_minus = make_germ(Endpoint::MinusOne, std::move(minus_terms));
    f.germ_plus = make_germ(Endpoint::PlusOne, std::move(plus_terms));
    return f;
}

TermFunction tf_zero() { return tf_from_global({}); }

namespace {

// Lift a TermList operation to both germs and, when every operand has one, to
// the global form.
template <typename Op>
TermFunction lift1(const TermFunction& f, Op op) {
    TermFunction out;
    out.germ_minus = make_germ(Endpoint::MinusOne, op(f.germ_minus.terms));
    out.germ_plus = make_germ(Endpoint::PlusOne, op(f.germ_plus.terms));
    if (f.global_terms) out.global_terms = collect(op(*f.global_terms));
    return out;
}

template <typename Op>
TermFunction lift2(const TermFunction& f, const TermFunction& g, Op op) {
    TermFunction out;
    out.germ_minus = make_germ(Endpoint::MinusOne, op(f.germ_minus.terms, g.germ_minus.terms));
    out.germ_plus = make_germ(Endpoint::PlusOne, op(f.germ_plus.terms, g.germ_plus.terms));
    if (f.global_terms && g.global_terms) out.global_terms = collect(op(*f.global_terms, *g.global_terms));
    return out;
}

} // namespace

TermFunction add(const TermFunction& f, const TermFunction& g) {
    return lift2(f, g, [](const TermList& x, const TermList& y) { return add(x, y); });
}

TermFunction negate(TermFunction f) {
    return lift1(f, [](const TermList& x) { return negate(x); });
}

TermFunction scale(TermFunction f, const GaussianRational& c) {
    return lift1(f, [&](const TermList& x) { return scale(x, c); });
}

TermFunction mul(const TermFunction& f, const TermFunction& g) {
    return lift2(f, g, [](const TermList& x, const TermList& y) { return mul(x, y); });
}

TermFunction conjugate(TermFunction f) {
    return lift1(f, [](const TermList& x) { return conjugate(x); });
}

TermFunction shift_powers(TermFunction f, const Rational& da, const Rational& db) {
    return lift1(f, [&](const TermList& x) { return shift_powers(x, da, db); });
}

TermFunction derivative(const TermFunction& f) {
    // Valid germwise: cutoffs realizing a germ are constant 1 near the
    // endpoint, so differentiation commutes with taking germs.
    return lift1(f, [](const TermList& x) { return derivative(x); });
}

TermFunction derivative(TermFunction f, long order) {
    for (long i = 0; i < order; ++i) f = derivative(f);
    return f;
}

TermFunction divide_by_weight(TermFunction f, const Params& p) {
    return shift_powers(std::move(f), -p.alpha, -p.beta);
}

bool equal(const TermFunction& f, const TermFunction& g) {
    return equal(collect(f.germ_minus.terms), collect(g.germ_minus.terms)) &&
           equal(collect(f.germ_plus.terms), collect(g.germ_plus.terms));
}

bool is_zero_fn(const TermFunction& f) {
    return is_zero(f.germ_minus.terms) && is_zero(f.germ_plus.terms);
}

namespace {

// Square-integrability against the weight near one endpoint.  t^e is
// w-square-integrable near the endpoint iff 2e + param > -1, so the germ
// fails iff its expansion has a surviving exponent e <= (-1-param)/2.
bool l2_near(const Germ& g, const Rational& param) {
    auto lead = leading_exponent(g);
    if (!lead) return true;
    const Rational threshold = (Rational(-1) - param) / Rational(2);
    if (Rational(2) * *lead + param > Rational(-1)) return true;  // every exponent is safe
    return endpoint_expansion(g, threshold).empty();
}

} // namespace

bool is_L2(const TermFunction& f, const Params& p) {
    return l2_near(f.germ_plus, p.alpha) && l2_near(f.germ_minus, p.beta);
}

} // namespace jacobi
