#include "jacobi/term.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace jacobi {

TermList collect(TermList terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& s, const Term& t) {
        return std::tie(s.a, s.b) < std::tie(t.a, t.b);
    });
    TermList out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().a == t.a && out.back().b == t.b) {
            out.back().coeff += t.coeff;
            if (out.back().coeff.is_zero()) out.pop_back();
        } else if (!t.coeff.is_zero()) {
            out.push_back(std::move(t));
        }
    }
    return out;
}

TermList add(const TermList& x, const TermList& y) {
    TermList out = x;
    out.insert(out.end(), y.begin(), y.end());
    return collect(std::move(out));
}

TermList negate(TermList x) {
    for (auto& t : x) t.coeff = -t.coeff;
    return x;
}

TermList scale(TermList x, const GaussianRational& c) {
    if (c.is_zero()) return {};
    for (auto& t : x) t.coeff *= c;
    return x;
}

TermList mul(const TermList& x, const TermList& y) {
    TermList out;
    out.reserve(x.size() * y.size());
    for (const auto& s : x)
        for (const auto& t : y)
            out.emplace_back(s.coeff * t.coeff, s.a + t.a, s.b + t.b);
    return collect(std::move(out));
}

TermList conjugate(TermList x) {
    for (auto& t : x) t.coeff = t.coeff.conj();
    return x;
}

TermList shift_powers(TermList x, const Rational& da, const Rational& db) {
    for (auto& t : x) { t.a += da; t.b += db; }
    return x;
}

TermList derivative(const TermList& x) {
    TermList out;
    out.reserve(2 * x.size());
    for (const auto& t : x) {
        if (!t.a.is_zero())
            out.emplace_back(t.coeff * GaussianRational(-t.a), t.a - Rational(1), t.b);
        if (!t.b.is_zero())
            out.emplace_back(t.coeff * GaussianRational(t.b), t.a, t.b - Rational(1));
    }
    return collect(std::move(out));
}

TermList derivative(TermList x, long order) {
    for (long i = 0; i < order; ++i) x = derivative(x);
    return x;
}

TermList canonicalize(TermList terms) {
    terms = collect(std::move(terms));
    // Anchor (1+x)-exponent of each integer-shift class; the class key is the
    // exponent's fractional part.  When the least exponent of a class is not
    // below its fractional part, the fractional part itself is a valid anchor
    // and is preferred: it does not depend on which terms the list happens to
    // contain, so e.g. all polynomial representations share anchors.
    std::map<Rational, Rational> least;
    for (const auto& t : terms) {
        const Rational frac = t.b - Rational(Int(t.b.floor()));
        auto [it, inserted] = least.try_emplace(frac, t.b);
        if (!inserted && t.b < it->second) it->second = t.b;
    }
    for (auto& [frac, anchor] : least)
        if (anchor >= frac) anchor = frac;
    TermList out;
    out.reserve(terms.size());
    for (const auto& t : terms) {
        const Rational frac = t.b - Rational(Int(t.b.floor()));
        const Rational drop = t.b - least.at(frac);  // nonnegative integer
        const long k = static_cast<long>(drop.num().get_si());
        // (1+x)^{m+k} = (1+x)^m sum_j C(k,j) 2^{k-j} (-1)^j (1-x)^j
        for (long j = 0; j <= k; ++j) {
            const Rational c = binomial_rational(k, j) * Rational(2).pow_int(k - j) *
                               (j % 2 == 0 ? Rational(1) : Rational(-1));
            out.emplace_back(t.coeff * GaussianRational(c), t.a + Rational(j), t.b - drop);
        }
    }
    return collect(std::move(out));
}

bool identical(const TermList& x, const TermList& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!(x[i].coeff == y[i].coeff) || x[i].a != y[i].a || x[i].b != y[i].b) return false;
    return true;
}

bool equal(const TermList& x, const TermList& y) {
    // Comparing through the difference anchors both lists on the class minima
    // of their union; canonicalizing the two sides separately could anchor
    // them on different exponents and miss the match.
    return is_zero(add(x, negate(y)));
}

} // namespace jacobi
