#include "jacobi/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "jacobi/errors.hpp"

namespace jacobi {

GreenReport green_identity_check(const TermFunction& f, const TermFunction& g, long n,
                                 const QuadratureSpec& spec, const Params& p) {
    spec.validate();
    if (!f.global_terms || !g.global_terms)
        throw NoGlobalForm("green_identity_check needs global terms for both functions");

    const SymmetricForm form = derive_symmetric_coefficients(n, p);
    const TermFunction lf = apply_ln_symmetric(f, form, p);
    const TermFunction lg = apply_ln_symmetric(g, form, p);

    // integral of ( l^n[f] conj(g) - f conj(l^n[g]) ) w
    const BigComplex i1 = weighted_integral_complex(lf, g, spec, p);
    const BigComplex i2 = weighted_integral_complex(lg, f, spec, p).conj();
    const BigComplex volume = i1 - i2;

    const TermFunction bexpr = sesqui_form_expression_weighted(f, g, form, p);
    if (!bexpr.global_terms)
        throw NoGlobalForm("boundary expression lost its global form");
    const mpfr_prec_t prec = spec.precision_bits;
    const BigComplex b_hi = eval_terms(*bexpr.global_terms, BigFloat::from_rational(spec.hi, prec));
    const BigComplex b_lo = eval_terms(*bexpr.global_terms, BigFloat::from_rational(spec.lo, prec));
    const BigComplex boundary = b_hi - b_lo;

    GreenReport r{volume, boundary, BigFloat(prec), BigFloat(prec)};
    r.absolute = (volume + boundary).abs();
    BigFloat scale = BigFloat::from_long(1, prec);
    if (volume.abs() > scale) scale = volume.abs();
    if (boundary.abs() > scale) scale = boundary.abs();
    r.relative = r.absolute / scale;
    return r;
}

namespace {

// Germ value at endpoint distance y: with t the distance variable,
// sum c t^{controlling} (2 - t)^{other}.
BigComplex eval_germ_at_distance(const Germ& g, const BigFloat& y) {
    const mpfr_prec_t prec = y.prec();
    const BigFloat two_minus = BigFloat::from_long(2, prec) - y;
    const bool plus = g.endpoint == Endpoint::PlusOne;
    BigComplex acc(prec);
    for (const auto& t : g.terms) {
        const Rational& ctl = plus ? t.a : t.b;
        const Rational& oth = plus ? t.b : t.a;
        BigFloat mag = y.pow(BigFloat::from_rational(ctl, prec)) *
                       two_minus.pow(BigFloat::from_rational(oth, prec));
        acc += BigComplex::from_gaussian(t.coeff, prec).scale(mag);
    }
    return acc;
}

} // namespace

ProbeReport limit_probe(const TermFunction& expr, Endpoint e, const Params& p,
                        const std::vector<long>& ks, mpfr_prec_t prec) {
    (void)p;  // the lattice is read off the germ itself
    if (ks.size() < 4) throw PreconditionViolated("limit_probe needs at least four probe indices");
    const long step = ks[1] - ks[0];
    if (step < 1) throw PreconditionViolated("limit_probe indices must increase");
    for (std::size_t i = 1; i < ks.size(); ++i)
        if (ks[i] - ks[i - 1] != step)
            throw PreconditionViolated("limit_probe indices must be an arithmetic progression");

    const Germ& germ = e == Endpoint::PlusOne ? expr.germ_plus : expr.germ_minus;

    ProbeReport out;
    out.value = BigComplex(prec);
    out.agreement = BigFloat(prec);

    std::vector<BigComplex> s;
    BigFloat peak(prec);
    for (long k : ks) {
        BigComplex v = eval_germ_at_distance(germ, BigFloat::pow2(-k, prec));
        if (v.abs() > peak) peak = v.abs();
        s.push_back(std::move(v));
    }

    // Everything at numerical zero: the germ vanishes identically at the probes.
    if (germ.terms.empty() || peak.is_zero()) {
        out.tag = LimTag::Zero;
        out.fitted_exponent = std::numeric_limits<double>::infinity();
        return out;
    }

    // Leading exponent from the decay of the last consecutive magnitudes:
    // |expr| ~ C 2^{-k e} makes the log2-difference per index equal e.
    const std::size_t m = s.size();
    const double last = std::log2(s[m - 1].abs().to_double());
    const double prev = std::log2(s[m - 2].abs().to_double());
    out.fitted_exponent = (prev - last) / static_cast<double>(step);

    if (out.fitted_exponent < -1e-3) {
        out.tag = LimTag::Infinite;
        return out;
    }

    // Exponent lattice realized by the germ: each term contributes its
    // controlling exponent plus nonnegative integers (the expansion of the
    // (2 - t) factor).  Eliminate the positive lattice points in increasing
    // order; each elimination consumes one sample.
    std::set<Rational> lattice;
    const bool plus = germ.endpoint == Endpoint::PlusOne;
    for (const auto& t : germ.terms) {
        const Rational ctl = plus ? t.a : t.b;
        for (long add = 0; add < 13; ++add) {
            Rational cand = ctl + Rational(add);
            if (cand.sign() > 0 && cand <= Rational(12)) lattice.insert(cand);
        }
    }

    std::vector<BigComplex> seq = std::move(s);
    const BigFloat one = BigFloat::from_long(1, prec);
    BigComplex prev_extrap = seq.back();
    std::size_t budget = seq.size() - 3;
    for (const Rational& exp_e : lattice) {
        if (budget == 0) break;
        --budget;
        prev_extrap = seq.back();
        // Component t^e shrinks by r = 2^{-e * step} per index; the weighted
        // difference below removes it while fixing the constant component.
        const BigFloat r = BigFloat::from_long(2, prec).pow(-(exp_e * Rational(step)));
        std::vector<BigComplex> next;
        next.reserve(seq.size() - 1);
        for (std::size_t i = 0; i + 1 < seq.size(); ++i)
            next.push_back((seq[i + 1] - seq[i].scale(r)).scale(one / (one - r)));
        seq = std::move(next);
    }

    out.value = seq.back();
    out.agreement = (seq.back() - prev_extrap).abs();

    const BigFloat zero_gate = BigFloat::from_double(1e-12, prec) * (peak > one ? peak : one);
    out.tag = out.value.abs() <= zero_gate ? LimTag::Zero : LimTag::Finite;
    if (out.tag == LimTag::Zero) out.value = BigComplex(prec);
    return out;
}

BigFloat leftdef_inner(const TermFunction& f, const TermFunction& g, long n,
                       const QuadratureSpec& spec, const Params& p) {
    const SymmetricForm form = derive_symmetric_coefficients(n, p);
    return weighted_integral(apply_ln_symmetric(f, form, p), g, spec, p);
}

} // namespace jacobi
