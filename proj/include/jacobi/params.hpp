#pragma once

#include "jacobi/rational.hpp"

namespace jacobi {

// Exact parameter pair of the weighted differential expression; the weight is
// (1-x)^alpha (1+x)^beta on (-1, 1).  Both parameters are rational and live
// in [0, 1), which keeps every endpoint exponent in the closed term algebra
// and every second-kind solution free of logarithms.
struct Params {
    Rational alpha, beta;

    Params(Rational a, Rational b) : alpha(std::move(a)), beta(std::move(b)) {
        if (alpha.sign() < 0 || alpha >= Rational(1) || beta.sign() < 0 || beta >= Rational(1))
            throw PreconditionViolated("parameters must satisfy 0 <= alpha < 1 and 0 <= beta < 1, got alpha=" +
                                       alpha.str() + " beta=" + beta.str());
    }
};

} // namespace jacobi
