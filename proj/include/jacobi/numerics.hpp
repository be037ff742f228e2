#pragma once

#include <vector>

#include "jacobi/quadrature.hpp"
#include "jacobi/sesquilinear.hpp"

namespace jacobi {

// Numeric verification of the integrated-by-parts identity
//   integral over [lo,hi] of ( l^n[f] conj(g) - f conj(l^n[g]) ) w dx
//     = -( B(hi) - B(lo) ),
// where B is the order-n boundary expression with its layers weighted by the
// derived symmetric-form coefficients.  Both functions need global terms.
struct GreenReport {
    BigComplex volume;    // the weighted volume integral
    BigComplex boundary;  // B(hi) - B(lo)
    BigFloat absolute;    // |volume + boundary|
    BigFloat relative;    // absolute / max(|volume|, |boundary|, 1)
};

GreenReport green_identity_check(const TermFunction& f, const TermFunction& g, long n,
                                 const QuadratureSpec& spec, const Params& p);

// Numeric shadow of the exact endpoint classification: evaluate the germ at
// x = 1 - 2^{-k} (or -1 + 2^{-k}) for the given k values, fit the leading
// exponent from consecutive magnitudes, and extrapolate the k -> infinity
// limit by eliminating the germ's known exponent lattice.
struct ProbeReport {
    LimTag tag = LimTag::Zero;
    BigComplex value;          // extrapolated limit; zero unless tag is Finite
    double fitted_exponent = 0.0;  // decay rate of the germ against the endpoint distance
    BigFloat agreement;        // difference of the last two extrapolants
};

ProbeReport limit_probe(const TermFunction& expr, Endpoint e, const Params& p,
                        const std::vector<long>& ks, mpfr_prec_t prec = 320);

// Quadrature of the higher-order inner product  integral l^n[f] conj(g) w dx
// over the requested interval.  Both functions need a representation there.
BigFloat leftdef_inner(const TermFunction& f, const TermFunction& g, long n,
                       const QuadratureSpec& spec, const Params& p);

} // namespace jacobi
