#pragma once

#include <stdexcept>
#include <string>

namespace jacobi {

// Error taxonomy for the exact engine.  Every throw carries a short message
// naming the offending input; callers that need exit-code mapping (the CLI)
// catch by type.

// A parameter value makes the requested object undefined, e.g. a second-kind
// endpoint function at alpha = 0 where the power ansatz degenerates.
struct DegenerateParameter : std::runtime_error {
    explicit DegenerateParameter(const std::string& what) : std::runtime_error(what) {}
};

// An endpoint limit required to be finite classified as infinite.
struct IndeterminateLimit : std::runtime_error {
    explicit IndeterminateLimit(const std::string& what) : std::runtime_error(what) {}
};

// A matrix handed to the extension builder fails the exact unitarity test.
struct NotUnitary : std::runtime_error {
    explicit NotUnitary(const std::string& what) : std::runtime_error(what) {}
};

// An exact linear solve has no unique solution.
struct SingularSystem : std::runtime_error {
    explicit SingularSystem(const std::string& what) : std::runtime_error(what) {}
};

// An operation was invoked outside its stated precondition.
struct PreconditionViolated : std::runtime_error {
    explicit PreconditionViolated(const std::string& what) : std::runtime_error(what) {}
};

// A numeric routine needs values on a subinterval where the input has no
// exact representation (no global term list and not inside a germ's side).
struct NoGlobalForm : std::runtime_error {
    explicit NoGlobalForm(const std::string& what) : std::runtime_error(what) {}
};

// Adaptive quadrature exhausted its refinement budget above tolerance.
struct ToleranceNotMet : std::runtime_error {
    explicit ToleranceNotMet(const std::string& what) : std::runtime_error(what) {}
};

// Division by zero in an exact scalar field.
struct NonInvertible : std::runtime_error {
    explicit NonInvertible(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input (function specs, scalars, matrices).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace jacobi
