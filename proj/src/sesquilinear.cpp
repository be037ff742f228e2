#include "jacobi/sesquilinear.hpp"

#include <vector>

namespace jacobi {

namespace {

TermFunction form_impl(const TermFunction& f, const TermFunction& g, long n, const Params& p,
                       const std::vector<Rational>* weights) {
    if (n < 1) throw PreconditionViolated("sesquilinear form needs n >= 1");
    const TermFunction gbar = conjugate(g);
    // Derivative tables f^(0..n), conj(g)^(0..n).
    std::vector<TermFunction> df{f}, dg{gbar};
    for (long k = 1; k <= n; ++k) {
        df.push_back(derivative(df.back()));
        dg.push_back(derivative(dg.back()));
    }
    TermFunction acc = tf_zero();
    for (long k = 1; k <= n; ++k) {
        // a_k f^{(k)} and a_k conj(g)^{(k)}, then their (k-j)-th derivatives.
        const Rational ea = p.alpha + Rational(k), eb = p.beta + Rational(k);
        TermFunction akf = shift_powers(df[k], ea, eb);
        TermFunction akg = shift_powers(dg[k], ea, eb);
        for (long j = k; j >= 1; --j) {
            // Loop invariant: akf = [a_k f^{(k)}]^{(k-j)} and likewise akg.
            TermFunction piece = add(mul(akf, dg[j - 1]), negate(mul(akg, df[j - 1])));
            if ((k + j) % 2 != 0) piece = negate(std::move(piece));
            if (weights) piece = scale(std::move(piece), GaussianRational((*weights)[k - 1]));
            acc = add(acc, piece);
            if (j > 1) {
                akf = derivative(akf);
                akg = derivative(akg);
            }
        }
    }
    return acc;
}

} // namespace

TermFunction sesqui_form_expression(const TermFunction& f, const TermFunction& g, long n,
                                    const Params& p) {
    return form_impl(f, g, n, p, nullptr);
}

TermFunction sesqui_form_expression_weighted(const TermFunction& f, const TermFunction& g,
                                             const SymmetricForm& form, const Params& p) {
    return form_impl(f, g, form.n, p, &form.C);
}

SesquiResult sesqui_eval(const TermFunction& f, const TermFunction& g, long n, const Params& p) {
    const TermFunction expr = sesqui_form_expression(f, g, n, p);
    SesquiResult out;
    out.at_plus = limit_classify(expr.germ_plus);
    out.at_minus = limit_classify(expr.germ_minus);
    if (out.at_plus.tag == LimTag::Infinite)
        throw IndeterminateLimit("sesquilinear form diverges at +1; input outside the maximal domain");
    if (out.at_minus.tag == LimTag::Infinite)
        throw IndeterminateLimit("sesquilinear form diverges at -1; input outside the maximal domain");
    out.full = out.at_plus.value - out.at_minus.value;
    return out;
}

StrongLimitPointReport strong_limit_point_check(const TermFunction& f, const TermFunction& g,
                                                const Params& p) {
    const TermFunction expr =
        shift_powers(mul(f, derivative(conjugate(g))), p.alpha + Rational(1), p.beta + Rational(1));
    return {limit_classify(expr.germ_plus), limit_classify(expr.germ_minus)};
}

} // namespace jacobi
