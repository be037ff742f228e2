#include "jacobi/bigfloat.hpp"

namespace jacobi {

BigComplex embed(const AlgebraicValue& v, mpfr_prec_t prec) {
    // Work with guard bits; the sum has few terms and each 2^{e} is computed
    // to 0.5 ulp, so the final rounding dominates.
    const mpfr_prec_t wp = prec + 64;
    BigComplex acc(wp);
    for (const auto& [c, e] : v.terms()) {
        BigFloat p(wp);
        mpfr_set_si(p.raw(), 2, MPFR_RNDN);
        BigFloat ef = BigFloat::from_rational(e, wp);
        mpfr_pow(p.raw(), p.raw(), ef.raw(), MPFR_RNDN);
        acc += BigComplex::from_gaussian(c, wp).scale(p);
    }
    BigComplex out(prec);
    mpfr_set(out.re.raw(), acc.re.raw(), MPFR_RNDN);
    mpfr_set(out.im.raw(), acc.im.raw(), MPFR_RNDN);
    return out;
}

BigFloat embed_real(const AlgebraicValue& v, mpfr_prec_t prec) {
    return embed(v, prec).re;
}

} // namespace jacobi
