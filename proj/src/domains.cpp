#include "jacobi/domains.hpp"

namespace jacobi {

bool in_maximal(const TermFunction& f, long n, const Params& p) {
    if (n < 1) throw PreconditionViolated("maximal domain needs n >= 1");
    return is_L2(f, p) && is_L2(apply_ln_composed(f, n, p), p);
}

namespace {

SmoothnessLimit classify_both(long k, long j, const TermFunction& expr) {
    SmoothnessLimit out;
    out.k = k;
    out.j = j;
    out.at_plus = limit_classify(expr.germ_plus);
    out.at_minus = limit_classify(expr.germ_minus);
    return out;
}

// [ (1-x)^{alpha+k} (1+x)^{beta+k} f^{(k)} ]^{(d)}
TermFunction weighted_block(const TermFunction& f, long k, long d, const Params& p) {
    return derivative(shift_powers(derivative(f, k), p.alpha + Rational(k), p.beta + Rational(k)), d);
}

} // namespace

DomainReport smoothness_report(const TermFunction& f, long n, const Params& p) {
    DomainReport report;
    report.in_max = in_maximal(f, n, p);
    if (!report.in_max)
        throw PreconditionViolated("smoothness report requires a maximal domain function");
    for (long j = 0; j <= n; ++j)
        report.limits.push_back(classify_both(-1, j, weighted_block(f, j, 0, p)));
    for (long k = 0; k <= n; ++k)
        for (long j = 1; j < k; ++j)
            report.limits.push_back(classify_both(k, j, weighted_block(f, k, k - j, p)));
    return report;
}

bool verify_maxdomain_theorem(long n, const Params& p, std::span<const CatalogEntry> sample) {
    for (const auto& entry : sample) {
        const DomainReport report = smoothness_report(entry.fn, n, p);
        for (const auto& lim : report.limits)
            if (lim.at_plus.tag == LimTag::Infinite || lim.at_minus.tag == LimTag::Infinite)
                return false;
    }
    return true;
}

bool in_minimal(const TermFunction& f, long n, const Params& p) {
    if (p.alpha.is_zero() || p.beta.is_zero())
        throw DegenerateParameter("minimal-domain test needs alpha > 0 and beta > 0");
    if (!in_maximal(f, n, p))
        throw PreconditionViolated("minimal-domain test requires a maximal domain function");
    for (const auto& b : defect_basis(n, p)) {
        if (!sesqui_eval(f, b.fn, n, p).full.is_zero()) return false;
    }
    return true;
}

namespace {

bool limits_vanish(const TermFunction& expr) {
    return limit_classify(expr.germ_plus).tag == LimTag::Zero &&
           limit_classify(expr.germ_minus).tag == LimTag::Zero;
}

} // namespace

LeftDefFlags leftdef_membership(const TermFunction& f, long n, const Params& p) {
    if (n < 1) throw PreconditionViolated("left-definite membership needs n >= 1");
    LeftDefFlags flags;

    // A: highest weighted derivative square-integrable, on top of maximality.
    {
        const Rational na = Rational(n) * (p.alpha + Rational(1));
        const Rational nb = Rational(n) * (p.beta + Rational(1));
        flags.A = in_maximal(f, n, p) &&
                  is_L2(shift_powers(derivative(f, 2 * n), na, nb), p);
    }

    // B: boundary form against the first n eigenpolynomials vanishes at each
    // endpoint separately (2n scalar conditions).
    {
        flags.B = true;
        for (long j = 0; j < n && flags.B; ++j) {
            const TermFunction expr = sesqui_form_expression(f, jacobi_poly(j, p), n, p);
            flags.B = limits_vanish(expr);
        }
    }

    // F: the n leading weighted blocks vanish at each endpoint.
    {
        flags.F = true;
        for (long j = 1; j <= n && flags.F; ++j) {
            const TermFunction block =
                derivative(shift_powers(derivative(f, j), p.alpha + Rational(j), p.beta + Rational(j)),
                           j - 1);
            flags.F = limits_vanish(block);
        }
    }

    // LW: half-integer weighted derivatives up to order 2n all square-integrable.
    {
        flags.LW = true;
        for (long j = 0; j <= 2 * n && flags.LW; ++j) {
            const Rational h = Rational(j, 2);
            flags.LW = is_L2(shift_powers(derivative(f, j), h, h), p);
        }
    }

    return flags;
}

bool leftdef_F_via_constants(const TermFunction& f, long n, const Params& p) {
    const TermFunction one = tf_from_global({Term(GaussianRational(Rational(1)), Rational(0), Rational(0))});
    for (long j = 1; j <= n; ++j) {
        const TermFunction expr = sesqui_form_expression(f, one, j, p);
        if (!limits_vanish(expr)) return false;
    }
    return true;
}

} // namespace jacobi
