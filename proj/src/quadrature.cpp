#include "jacobi/quadrature.hpp"

#include <map>
#include <utility>
#include <vector>

#include "jacobi/errors.hpp"

namespace jacobi {

void QuadratureSpec::validate() const {
    if (!(Rational(-1) < lo && lo < hi && hi < Rational(1)))
        throw PreconditionViolated("quadrature interval must satisfy -1 < lo < hi < 1");
    if (max_subdivisions < 1) throw PreconditionViolated("quadrature needs a positive refinement budget");
}

BigComplex eval_terms(const TermList& terms, const BigFloat& x) {
    const mpfr_prec_t prec = x.prec();
    const BigFloat one = BigFloat::from_long(1, prec);
    const BigFloat om = one - x;  // 1 - x > 0 inside the interval
    const BigFloat op = one + x;  // 1 + x > 0 inside the interval
    BigComplex acc(prec);
    for (const auto& t : terms) {
        BigFloat mag = om.pow(BigFloat::from_rational(t.a, prec)) *
                       op.pow(BigFloat::from_rational(t.b, prec));
        acc += BigComplex::from_gaussian(t.coeff, prec).scale(mag);
    }
    return acc;
}

const TermList* representation_on(const TermFunction& f, const Rational& lo, const Rational& hi) {
    if (f.global_terms) return &*f.global_terms;
    if (lo >= Rational(0)) return &f.germ_plus.terms;
    if (hi <= Rational(0)) return &f.germ_minus.terms;
    return nullptr;
}

namespace {

struct GaussRule {
    std::vector<BigFloat> nodes;    // on (-1, 1)
    std::vector<BigFloat> weights;
};

// Legendre value and derivative by the three-term recurrence.
std::pair<BigFloat, BigFloat> legendre_pair(long n, const BigFloat& x) {
    const mpfr_prec_t prec = x.prec();
    BigFloat pm1 = BigFloat::from_long(1, prec);  // P_0
    BigFloat p = x;                               // P_1
    for (long k = 2; k <= n; ++k) {
        BigFloat pk = (BigFloat::from_long(2 * k - 1, prec) * x * p -
                       BigFloat::from_long(k - 1, prec) * pm1) /
                      BigFloat::from_long(k, prec);
        pm1 = std::move(p);
        p = std::move(pk);
    }
    // P_n'(x) = n (x P_n - P_{n-1}) / (x^2 - 1)
    BigFloat dp = BigFloat::from_long(n, prec) * (x * p - pm1) /
                  (x * x - BigFloat::from_long(1, prec));
    return {p, dp};
}

const GaussRule& gauss_rule(long n, mpfr_prec_t prec) {
    static std::map<std::pair<long, long>, GaussRule> cache;
    auto key = std::make_pair(n, static_cast<long>(prec));
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    GaussRule rule;
    const BigFloat one = BigFloat::from_long(1, prec);
    const BigFloat two = BigFloat::from_long(2, prec);
    const BigFloat pi = BigFloat::pi(prec);
    const BigFloat tiny = BigFloat::pow2(-static_cast<long>(prec) + 8, prec);
    for (long i = 1; i <= n; ++i) {
        // Chebyshev-style initial guess, then Newton to full precision.
        BigFloat x = (pi * (BigFloat::from_long(i, prec) - BigFloat::from_double(0.25, prec)) /
                      (BigFloat::from_long(n, prec) + BigFloat::from_double(0.5, prec)))
                         .cos();
        for (int iter = 0; iter < 200; ++iter) {
            auto [p, dp] = legendre_pair(n, x);
            BigFloat step = p / dp;
            x -= step;
            if (step.abs() < tiny) break;
        }
        auto [p, dp] = legendre_pair(n, x);
        (void)p;
        rule.nodes.push_back(x);
        rule.weights.push_back(two / ((one - x * x) * dp * dp));
    }
    return cache.emplace(key, std::move(rule)).first->second;
}

BigComplex gauss_estimate(const std::function<BigComplex(const BigFloat&)>& fn, long n,
                          const BigFloat& lo, const BigFloat& hi, mpfr_prec_t prec) {
    const BigFloat half = BigFloat::from_double(0.5, prec);
    const BigFloat mid = (lo + hi) * half;
    const BigFloat rad = (hi - lo) * half;
    const GaussRule& rule = gauss_rule(n, prec);
    BigComplex acc(prec);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        acc += fn(mid + rad * rule.nodes[i]).scale(rule.weights[i]);
    return acc.scale(rad);
}

// Weighted samples of the tanh-sinh substitution
//   x = mid + rad tanh((pi/2) sinh u)
// at u = j h for the requested j values; the endpoints map to u = +/-inf with
// doubly exponential weight decay, so truncation in u is benign.  Because the
// interval is strictly inside (-1, 1), every sample point is interior and the
// integrand stays finite.
BigComplex tanhsinh_samples(const std::function<BigComplex(const BigFloat&)>& fn,
                            const BigFloat& h, long j_from, long j_step,
                            const BigFloat& mid, const BigFloat& rad, mpfr_prec_t prec) {
    const BigFloat half_pi = BigFloat::pi(prec) * BigFloat::from_double(0.5, prec);
    const BigFloat cutoff = BigFloat::pow2(-static_cast<long>(prec) - 16, prec);
    const double u_max = 7.0;
    const long j_max = static_cast<long>(u_max / h.to_double()) + 1;

    BigComplex acc(prec);
    for (long j = j_from; j <= j_max; j += j_step) {
        for (int side = 0; side < (j == 0 ? 1 : 2); ++side) {
            BigFloat u = BigFloat::from_long(side == 0 ? j : -j, prec) * h;
            BigFloat s = half_pi * u.sinh();
            BigFloat ch = s.cosh();
            BigFloat weight = half_pi * u.cosh() / (ch * ch);
            if (weight < cutoff) continue;
            BigFloat x = mid + rad * s.tanh();
            acc += fn(x).scale(weight);
        }
    }
    return acc;
}

BigFloat scale_of(const BigComplex& v) {
    BigFloat s = v.abs();
    BigFloat one = BigFloat::from_long(1, s.prec());
    return s > one ? s : one;
}

} // namespace

BigComplex integrate(const std::function<BigComplex(const BigFloat&)>& fn,
                     const QuadratureSpec& spec) {
    spec.validate();
    const mpfr_prec_t prec = spec.precision_bits;
    const BigFloat lo = BigFloat::from_rational(spec.lo, prec);
    const BigFloat hi = BigFloat::from_rational(spec.hi, prec);
    const BigFloat tol = BigFloat::from_double(spec.target_rel_error, prec);

    BigComplex prev(prec);
    bool have_prev = false;
    if (spec.method == QuadratureMethod::TanhSinh) {
        const BigFloat half = BigFloat::from_double(0.5, prec);
        const BigFloat mid = (lo + hi) * half;
        const BigFloat rad = (hi - lo) * half;
        BigComplex samples(prec);  // running sum of weight * f over all sampled u
        for (long level = 1; level <= spec.max_subdivisions; ++level) {
            BigFloat h = BigFloat::pow2(-level, prec);
            // The even multiples of h were sampled at the previous level; only
            // the odd ones are new.
            samples += tanhsinh_samples(fn, h, level == 1 ? 0 : 1, level == 1 ? 1 : 2, mid, rad, prec);
            BigComplex cur = samples.scale(rad * h);
            if (have_prev && (cur - prev).abs() <= tol * scale_of(cur)) return cur;
            prev = std::move(cur);
            have_prev = true;
        }
    } else {
        long n = 24;
        for (long round = 0; round < spec.max_subdivisions; ++round) {
            BigComplex cur = gauss_estimate(fn, n, lo, hi, prec);
            if (have_prev && (cur - prev).abs() <= tol * scale_of(cur)) return cur;
            prev = std::move(cur);
            have_prev = true;
            n = n * 3 / 2 + 8;
        }
    }
    throw ToleranceNotMet("quadrature did not reach the requested tolerance within the refinement budget");
}

BigComplex weighted_integral_complex(const TermFunction& f, const TermFunction& g,
                                     const QuadratureSpec& spec, const Params& p) {
    spec.validate();
    const TermList* F = representation_on(f, spec.lo, spec.hi);
    const TermList* G = representation_on(g, spec.lo, spec.hi);
    if (!F || !G)
        throw NoGlobalForm("weighted_integral needs global terms or an interval inside one germ's validity region");
    const mpfr_prec_t prec = spec.precision_bits;
    const Rational alpha = p.alpha, beta = p.beta;
    auto integrand = [&](const BigFloat& x) {
        const BigFloat one = BigFloat::from_long(1, prec);
        BigFloat w = (one - x).pow(BigFloat::from_rational(alpha, prec)) *
                     (one + x).pow(BigFloat::from_rational(beta, prec));
        return (eval_terms(*F, x) * eval_terms(*G, x).conj()).scale(w);
    };
    return integrate(integrand, spec);
}

BigFloat weighted_integral(const TermFunction& f, const TermFunction& g,
                           const QuadratureSpec& spec, const Params& p) {
    return weighted_integral_complex(f, g, spec, p).re;
}

} // namespace jacobi
