#pragma once

#include <string>

#include "json.hpp"

#include "jacobi/catalog.hpp"
#include "jacobi/operator.hpp"
#include "jacobi/sesquilinear.hpp"
#include "jacobi/term_function.hpp"

namespace jacobi {

using Json = nlohmann::ordered_json;

// JSON encodings used by the command-line tools and the test fixtures.
//   Rational           ->  "p/q"
//   GaussianRational   ->  "p/q", "p/q+r/si", "i", ...
//   AlgebraicValue     ->  [ {"coeff": ..., "pow2": "k/D"}, ... ]
//   Term               ->  {"coeff": ..., "a": "p/q", "b": "p/q"}
//   TermFunction       ->  {"germ_minus": [...], "germ_plus": [...], "global": [...]|null}
//   SymmetricForm      ->  {"n": n, "C": ["p/q", ...]}
//   LimitClass         ->  {"tag": "Zero|Finite|Infinite", "value"?: [...]}
//   SesquiResult       ->  {"at_plus": ..., "at_minus": ..., "full": ...}

Json to_json(const Rational& v);
Json to_json(const GaussianRational& v);
Json to_json(const AlgebraicValue& v);
Json to_json(const Term& t);
Json to_json(const TermList& terms);
Json to_json(const TermFunction& f);
Json to_json(const SymmetricForm& form);
Json to_json(const LimitClass& c);
Json to_json(const SesquiResult& r);
Json to_json(const CatalogEntry& e);  // {"name": "phi+:2", "fn": {...}}

Rational rational_from_json(const Json& j);
GaussianRational gaussian_from_json(const Json& j);
AlgebraicValue algebraic_from_json(const Json& j);
Term term_from_json(const Json& j);
TermList termlist_from_json(const Json& j);

// Low-precision float preview of an exact value, for human-readable output.
double preview_real(const AlgebraicValue& v);

} // namespace jacobi
