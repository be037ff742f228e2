#include "jacobi/gkn.hpp"

#include <algorithm>

namespace jacobi {

AMatrix build_pairing_matrix(long n, Endpoint side, const Params& p) {
    const Rational& a = side == Endpoint::PlusOne ? p.alpha : p.beta;
    if (a.is_zero())
        throw DegenerateParameter("pairing matrix needs a positive parameter at the chosen endpoint");
    std::vector<TermFunction> basis;
    basis.reserve(2 * n);
    for (long j = 0; j < n; ++j) basis.push_back(phi(j, side));
    for (long j = 0; j < n; ++j) basis.push_back(psi(j, side, p));
    AMatrix m(2 * n, std::vector<AlgebraicValue>(2 * n));
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j)
            m[i][j] = sesqui_eval(basis[i], basis[j], n, p).full;
    return m;
}

long exact_rank(AMatrix m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    std::size_t rank = 0;
    AlgebraicValue prev(1);
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t r = rank;
        while (r < rows && m[r][c].is_zero()) ++r;
        if (r == rows) continue;
        std::swap(m[r], m[rank]);
        const AlgebraicValue pivot = m[rank][c];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m[i][j] = (m[i][j] * pivot - m[i][c] * m[rank][j]) / prev;
            m[i][c] = AlgebraicValue();
        }
        prev = pivot;
        ++rank;
    }
    return static_cast<long>(rank);
}

BoundaryCondition BoundaryCondition::single(std::string label, TermFunction f) {
    BoundaryCondition out;
    out.label = std::move(label);
    out.parts.emplace_back(AlgebraicValue(1), std::move(f));
    return out;
}

AlgebraicValue boundary_form_full(const BoundaryCondition& w1, const BoundaryCondition& w2, long n,
                                  const Params& p) {
    AlgebraicValue acc;
    for (const auto& [c1, f1] : w1.parts)
        for (const auto& [c2, f2] : w2.parts)
            acc += c1 * c2.conj() * sesqui_eval(f1, f2, n, p).full;
    return acc;
}

bool glazman_symmetry_check(const BoundaryConditionSet& w, const Params& p) {
    for (std::size_t i = 0; i < w.conditions.size(); ++i)
        for (std::size_t j = i; j < w.conditions.size(); ++j)
            if (!boundary_form_full(w.conditions[i], w.conditions[j], w.n, p).is_zero()) return false;
    return true;
}

bool lin_indep_mod_minimal(const BoundaryConditionSet& w, const Params& p) {
    if (p.alpha.is_zero() || p.beta.is_zero())
        throw DegenerateParameter("independence test needs alpha > 0 and beta > 0");
    const auto basis = defect_basis(w.n, p);
    AMatrix pairings(w.conditions.size(), std::vector<AlgebraicValue>(basis.size()));
    for (std::size_t i = 0; i < w.conditions.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j)
            pairings[i][j] =
                boundary_form_full(w.conditions[i], BoundaryCondition::single(basis[j].name, basis[j].fn),
                                   w.n, p);
    return exact_rank(std::move(pairings)) == static_cast<long>(w.conditions.size());
}

long condition_count(const BoundaryConditionSet& w) {
    long count = 0;
    for (const auto& cond : w.conditions) {
        bool plus = false, minus = false;
        for (const auto& [c, f] : cond.parts) {
            if (c.is_zero()) continue;
            plus = plus || !f.germ_plus.terms.empty();
            minus = minus || !f.germ_minus.terms.empty();
        }
        count += (plus ? 1 : 0) + (minus ? 1 : 0);
    }
    return count;
}

bool domain_equal(const BoundaryConditionSet& w1, const BoundaryConditionSet& w2, const Params& p) {
    if (w1.n != w2.n) throw PreconditionViolated("condition sets compare at different orders");
    const long expected = 2 * w1.n;
    if (condition_count(w1) != expected || condition_count(w2) != expected)
        throw PreconditionViolated("each set must impose exactly 2n endpoint conditions");
    if (!glazman_symmetry_check(w1, p) || !glazman_symmetry_check(w2, p))
        throw PreconditionViolated("both condition sets must pass the symmetry check");
    if (!p.alpha.is_zero() && !p.beta.is_zero()) {
        if (!lin_indep_mod_minimal(w1, p) || !lin_indep_mod_minimal(w2, p))
            throw PreconditionViolated("both condition sets must be independent modulo the minimal domain");
    }
    for (const auto& c2 : w2.conditions)
        for (const auto& c1 : w1.conditions)
            if (!boundary_form_full(c2, c1, w1.n, p).is_zero()) return false;
    // The reverse direction follows exactly from skew-Hermitian symmetry of
    // the form, so one orientation decides both.
    return true;
}

ExtensionMatrix ExtensionMatrix::identity(long size) {
    ExtensionMatrix out;
    out.u.assign(size, std::vector<GaussianRational>(size));
    for (long i = 0; i < size; ++i) out.u[i][i] = GaussianRational(Rational(1));
    return out;
}

bool ExtensionMatrix::is_unitary() const {
    const std::size_t size = u.size();
    for (const auto& row : u)
        if (row.size() != size) return false;
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
            GaussianRational dot;
            for (std::size_t k = 0; k < size; ++k) dot += u[i][k] * u[j][k].conj();
            const GaussianRational expected =
                i == j ? GaussianRational(Rational(1)) : GaussianRational();
            if (!(dot == expected)) return false;
        }
    }
    return true;
}

namespace {

// Coefficient vectors over one endpoint's comparison basis, with the
// boundary form as an exact bilinear form (entries are real, the form is
// skew-symmetric on real vectors).
using Vec = std::vector<AlgebraicValue>;

Vec axpy(Vec v, const AlgebraicValue& c, const Vec& w) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * w[i];
    return v;
}

AlgebraicValue sform(const AMatrix& s, const Vec& x, const Vec& y) {
    AlgebraicValue acc;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (y[j].is_zero()) continue;
            acc += x[i] * s[i][j] * y[j];
        }
    }
    return acc;
}

BoundaryCondition combine(std::string label, const Vec& coeffs,
                          const std::vector<CatalogEntry>& basis) {
    BoundaryCondition out;
    out.label = std::move(label);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (!coeffs[i].is_zero()) out.parts.emplace_back(coeffs[i], basis[i].fn);
    return out;
}

} // namespace

SymplecticBasis canonical_defect_basis(long n, Endpoint side, const Params& p) {
    const AMatrix s = build_pairing_matrix(n, side, p);
    const std::size_t dim = 2 * n;
    // Darboux pairing on the real span of the comparison functions: repeatedly
    // split off a two-dimensional hyperbolic pair and restrict the form to its
    // complement.  Exact throughout; the needed nonzero partner exists because
    // the pairing matrix has full rank.
    std::vector<Vec> pool;
    for (std::size_t i = 0; i < dim; ++i) {
        Vec e(dim);
        e[i] = AlgebraicValue(1);
        pool.push_back(std::move(e));
    }
    std::vector<std::pair<Vec, Vec>> pairs;
    while (!pool.empty()) {
        Vec u = std::move(pool.front());
        pool.erase(pool.begin());
        std::size_t partner = pool.size();
        AlgebraicValue val;
        for (std::size_t i = 0; i < pool.size(); ++i) {
            val = sform(s, u, pool[i]);
            if (!val.is_zero()) { partner = i; break; }
        }
        if (partner == pool.size())
            throw SingularSystem("degenerate boundary form: no symplectic partner found");
        Vec v = std::move(pool[partner]);
        pool.erase(pool.begin() + static_cast<long>(partner));
        const AlgebraicValue inv = val.inverse();
        for (auto& c : v) c *= inv;  // now sform(u, v) = 1
        for (auto& g : pool) {
            const AlgebraicValue cu = sform(s, u, g);
            const AlgebraicValue cv = sform(s, v, g);
            // g - sform(u,g) v + sform(v,g) u annihilates both u and v.
            g = axpy(axpy(std::move(g), -cu, v), cv, u);
        }
        pairs.emplace_back(std::move(u), std::move(v));
    }
    // From each hyperbolic pair, p - i q and p + i q have gram +2i and -2i.
    std::vector<CatalogEntry> basis;
    basis.reserve(dim);
    for (long j = 0; j < n; ++j) {
        const char* suffix = side == Endpoint::PlusOne ? "+" : "-";
        basis.push_back({"phi" + std::string(suffix) + ":" + std::to_string(j), phi(j, side)});
    }
    for (long j = 0; j < n; ++j) {
        const char* suffix = side == Endpoint::PlusOne ? "+" : "-";
        basis.push_back({"psi" + std::string(suffix) + ":" + std::to_string(j), psi(j, side, p)});
    }
    SymplecticBasis out;
    const AlgebraicValue plus_i(GaussianRational::i());
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        const auto& [pv, qv] = pairs[k];
        const std::string tag = std::string(name(side)) + "#" + std::to_string(k);
        out.positive.push_back(combine("e" + tag, axpy(pv, -plus_i, qv), basis));
        out.negative.push_back(combine("ebar" + tag, axpy(pv, plus_i, qv), basis));
    }
    return out;
}

BoundaryConditionSet extension_from_unitary(const ExtensionMatrix& u, const Params& p) {
    const long size = static_cast<long>(u.u.size());
    if (size == 0 || size % 2 != 0) throw NotUnitary("extension matrix must be 2n x 2n");
    if (!u.is_unitary()) throw NotUnitary("extension matrix fails the exact unitarity test");
    const long n = size / 2;
    if (p.alpha.is_zero() || p.beta.is_zero())
        throw DegenerateParameter("extension construction needs alpha > 0 and beta > 0");
    const SymplecticBasis at_plus = canonical_defect_basis(n, Endpoint::PlusOne, p);
    const SymplecticBasis at_minus = canonical_defect_basis(n, Endpoint::MinusOne, p);
    // Positive block e: +1-side entries then -1-side; negative block ebar in
    // the crossed order, so the identity matrix pairs +1 with -1.
    std::vector<const BoundaryCondition*> e, ebar;
    for (const auto& c : at_plus.positive) e.push_back(&c);
    for (const auto& c : at_minus.positive) e.push_back(&c);
    for (const auto& c : at_minus.negative) ebar.push_back(&c);
    for (const auto& c : at_plus.negative) ebar.push_back(&c);
    BoundaryConditionSet out;
    out.n = n;
    for (long j = 0; j < size; ++j) {
        BoundaryCondition cond;
        cond.label = "ext:" + std::to_string(j);
        cond.parts = e[j]->parts;
        for (long k = 0; k < size; ++k) {
            if (u.u[k][j].is_zero()) continue;
            const AlgebraicValue c(u.u[k][j]);
            for (const auto& [w, f] : ebar[k]->parts) cond.parts.emplace_back(c * w, f);
        }
        out.conditions.push_back(std::move(cond));
    }
    return out;
}

} // namespace jacobi
