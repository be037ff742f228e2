#include "jacobi/operator.hpp"

#include <map>
#include <utility>

namespace jacobi {

TermFunction apply_l(const TermFunction& f, const Params& p) {
    TermFunction inner = shift_powers(derivative(f), p.alpha + Rational(1), p.beta + Rational(1));
    return divide_by_weight(negate(derivative(inner)), p);
}

TermFunction apply_ln_composed(TermFunction f, long n, const Params& p) {
    for (long i = 0; i < n; ++i) f = apply_l(f, p);
    return f;
}

namespace {

// (1/w) * (-1)^k * [ (1-x)^{alpha+k} (1+x)^{beta+k} f^{(k)} ]^{(k)}, the
// k-th building block of the symmetric form.
TermFunction symmetric_block(const TermFunction& f, long k, const Params& p) {
    TermFunction inner = shift_powers(derivative(f, k), p.alpha + Rational(k), p.beta + Rational(k));
    TermFunction out = divide_by_weight(derivative(std::move(inner), k), p);
    if (k % 2 != 0) out = negate(std::move(out));
    return out;
}

} // namespace

TermFunction apply_ln_symmetric(const TermFunction& f, const SymmetricForm& form, const Params& p) {
    TermFunction acc = tf_zero();
    for (long k = 1; k <= form.n; ++k)
        acc = add(acc, scale(symmetric_block(f, k, p), GaussianRational(form.C[k - 1])));
    return acc;
}

std::vector<Rational> solve_rational(std::vector<std::vector<Rational>> A, std::vector<Rational> rhs) {
    const std::size_t rows = A.size();
    const std::size_t cols = rows == 0 ? 0 : A[0].size();
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_row(cols);
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pr = rank;
        while (pr < rows && A[pr][c].is_zero()) ++pr;
        if (pr == rows) continue;
        std::swap(A[pr], A[rank]);
        std::swap(rhs[pr], rhs[rank]);
        const Rational inv = Rational(1) / A[rank][c];
        for (std::size_t j = c; j < cols; ++j) A[rank][j] *= inv;
        rhs[rank] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || A[r][c].is_zero()) continue;
            const Rational f = A[r][c];
            for (std::size_t j = c; j < cols; ++j) A[r][j] -= f * A[rank][j];
            rhs[r] -= f * rhs[rank];
        }
        pivot_row[c] = rank;
        ++rank;
    }
    if (rank < cols) throw SingularSystem("coefficient system does not determine all unknowns");
    for (std::size_t r = rank; r < rows; ++r)
        if (!rhs[r].is_zero()) throw SingularSystem("coefficient system is inconsistent");
    std::vector<Rational> x(cols);
    for (std::size_t c = 0; c < cols; ++c) x[c] = rhs[pivot_row[c]];
    return x;
}

SymmetricForm derive_symmetric_coefficients(long n, const Params& p) {
    if (n < 1) throw PreconditionViolated("symmetric form needs n >= 1");
    // Unknowns C(n,1..n).  For each test monomial f_j the symmetric ansatz is
    // linear in the unknowns, so every exponent pair appearing in either side
    // contributes one scalar equation.
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> rhs;
    auto push_equations = [&](const TermFunction& f) {
        const TermFunction target = apply_ln_composed(f, n, p);
        std::vector<TermFunction> blocks;
        blocks.reserve(n);
        for (long k = 1; k <= n; ++k) blocks.push_back(symmetric_block(f, k, p));
        std::map<std::pair<Rational, Rational>, std::size_t> row_of;
        auto row_for = [&](const Rational& a, const Rational& b) -> std::size_t {
            auto [it, fresh] = row_of.try_emplace({a, b}, A.size());
            if (fresh) {
                A.emplace_back(n, Rational(0));
                rhs.emplace_back(0);
            }
            return it->second;
        };
        auto coeff_real = [](const GaussianRational& c) {
            if (!c.is_real()) throw SingularSystem("unexpected imaginary coefficient in real solve");
            return c.re;
        };
        // Canonical forms on both sides: the raw outputs of the two pipelines
        // may represent equal functions over different exponent pairs.
        for (long k = 1; k <= n; ++k)
            for (const auto& t : canonicalize(*blocks[k - 1].global_terms))
                A[row_for(t.a, t.b)][k - 1] += coeff_real(t.coeff);
        for (const auto& t : canonicalize(*target.global_terms))
            rhs[row_for(t.a, t.b)] += coeff_real(t.coeff);
    };
    for (long j = 0; j <= 2 * n + 2; ++j) {
        TermList mono{Term(GaussianRational(Rational(1)), Rational(j), Rational(0))};
        push_equations(tf_from_global(std::move(mono)));
    }
    SymmetricForm form{n, solve_rational(std::move(A), std::move(rhs))};
    // Independent check on a second family the solve never saw.
    for (long j = 0; j <= 2 * n + 2; ++j) {
        TermList mono{Term(GaussianRational(Rational(1)), Rational(0), Rational(j))};
        TermFunction f = tf_from_global(std::move(mono));
        if (!equal(apply_ln_symmetric(f, form, p), apply_ln_composed(f, n, p)))
            throw SingularSystem("derived symmetric coefficients fail verification");
    }
    return form;
}

} // namespace jacobi
