#pragma once

#include <optional>

#include "jacobi/algebraic.hpp"
#include "jacobi/term.hpp"

namespace jacobi {

enum class Endpoint { MinusOne, PlusOne };

inline Endpoint other(Endpoint e) {
    return e == Endpoint::PlusOne ? Endpoint::MinusOne : Endpoint::PlusOne;
}
inline const char* name(Endpoint e) { return e == Endpoint::PlusOne ? "+1" : "-1"; }

// Local behaviour of a function near one endpoint, as a closed term list.
// Terms are kept sorted by the exponent that controls the endpoint: ascending
// (a, b) at +1, ascending (b, a) at -1, so the front term is the leading one.
struct Germ {
    Endpoint endpoint = Endpoint::PlusOne;
    TermList terms;  // canonical per-endpoint order, no zero coefficients
};

Germ make_germ(Endpoint e, TermList terms);

// Outcome of an exact one-sided endpoint limit.
enum class LimTag { Zero, Finite, Infinite };

struct LimitClass {
    LimTag tag = LimTag::Zero;
    AlgebraicValue value;  // nonzero only when tag == Finite

    static LimitClass zero() { return {LimTag::Zero, AlgebraicValue()}; }
    static LimitClass infinite() { return {LimTag::Infinite, AlgebraicValue()}; }
    static LimitClass finite(AlgebraicValue v);  // normalizes Finite(0) to Zero

    friend bool operator==(const LimitClass& x, const LimitClass& y) {
        return x.tag == y.tag && x.value == y.value;
    }
};

// Exact one-sided limit of a germ at its endpoint.  At +1 the least
// (1-x)-exponent decides: negative means Infinite, zero means Finite with
// value sum of coeff * 2^b over the exponent-zero terms, positive (or an
// empty germ) means Zero.  Mirrored at -1.  When the least exponent is
// negative the verdict is confirmed against the exact series expansion of the
// (1+x)-factors: distinct terms can interfere (their 2^b-weighted sums may
// cancel), and a germ whose divergent part cancels exactly is still
// classified by its true finite limit.
LimitClass limit_classify(const Germ& g);

// Least endpoint-controlling exponent; nullopt for an empty germ.
std::optional<Rational> leading_exponent(const Germ& g);

// A function represented by its germs at both endpoints and, when the same
// term list is valid on all of (-1, 1), a global form.  When global_terms is
// present both germs describe the same function near their endpoints (the
// lists may differ textually, e.g. a polynomial re-expanded in powers of
// (1+x) at -1, but they agree as functions).
struct TermFunction {
    Germ germ_minus{Endpoint::MinusOne, {}};
    Germ germ_plus{Endpoint::PlusOne, {}};
    std::optional<TermList> global_terms;
};

TermFunction tf_from_global(TermList terms);
TermFunction tf_from_germs(TermList minus_terms, TermList plus_terms);
TermFunction tf_zero();

TermFunction add(const TermFunction& f, const TermFunction& g);
TermFunction negate(TermFunction f);
TermFunction scale(TermFunction f, const GaussianRational& c);
TermFunction mul(const TermFunction& f, const TermFunction& g);
TermFunction conjugate(TermFunction f);
TermFunction shift_powers(TermFunction f, const Rational& da, const Rational& db);
TermFunction derivative(const TermFunction& f);
TermFunction derivative(TermFunction f, long order);
TermFunction divide_by_weight(TermFunction f, const Params& p);

bool equal(const TermFunction& f, const TermFunction& g);
bool is_zero_fn(const TermFunction& f);

// Exact square-integrability against the weight (1-x)^alpha (1+x)^beta:
// near +1 an exponent e in the germ's exact endpoint expansion is square
// integrable iff 2e + alpha > -1, so membership holds iff no expansion
// exponent at or below the threshold (-1-alpha)/2 survives; mirrored at -1
// with beta.  For germs without exponent interference this is the familiar
// leading-exponent test.  An empty germ imposes no constraint on its side.
bool is_L2(const TermFunction& f, const Params& p);

} // namespace jacobi
