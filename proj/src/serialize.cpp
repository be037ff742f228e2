#include "jacobi/serialize.hpp"

#include "jacobi/bigfloat.hpp"
#include "jacobi/errors.hpp"

namespace jacobi {

Json to_json(const Rational& v) { return v.str(); }

Json to_json(const GaussianRational& v) { return v.str(); }

Json to_json(const AlgebraicValue& v) {
    Json arr = Json::array();
    for (const auto& [coeff, pow2] : v.terms())
        arr.push_back(Json{{"coeff", to_json(coeff)}, {"pow2", to_json(pow2)}});
    return arr;
}

Json to_json(const Term& t) {
    return Json{{"coeff", to_json(t.coeff)}, {"a", to_json(t.a)}, {"b", to_json(t.b)}};
}

Json to_json(const TermList& terms) {
    Json arr = Json::array();
    for (const auto& t : terms) arr.push_back(to_json(t));
    return arr;
}

Json to_json(const TermFunction& f) {
    Json out{{"germ_minus", to_json(f.germ_minus.terms)},
             {"germ_plus", to_json(f.germ_plus.terms)}};
    out["global"] = f.global_terms ? to_json(*f.global_terms) : Json(nullptr);
    return out;
}

Json to_json(const SymmetricForm& form) {
    Json cs = Json::array();
    for (const auto& c : form.C) cs.push_back(to_json(c));
    return Json{{"n", form.n}, {"C", cs}};
}

Json to_json(const LimitClass& c) {
    switch (c.tag) {
        case LimTag::Zero: return Json{{"tag", "Zero"}};
        case LimTag::Infinite: return Json{{"tag", "Infinite"}};
        case LimTag::Finite: break;
    }
    return Json{{"tag", "Finite"}, {"value", to_json(c.value)}};
}

Json to_json(const SesquiResult& r) {
    return Json{{"at_plus", to_json(r.at_plus)},
                {"at_minus", to_json(r.at_minus)},
                {"full", to_json(r.full)}};
}

Json to_json(const CatalogEntry& e) { return Json{{"name", e.name}, {"fn", to_json(e.fn)}}; }

namespace {

std::string need_string(const Json& j, const char* what) {
    if (!j.is_string()) throw ParseError(std::string("expected a string for ") + what);
    return j.get<std::string>();
}

} // namespace

Rational rational_from_json(const Json& j) { return Rational::parse(need_string(j, "a rational")); }

GaussianRational gaussian_from_json(const Json& j) {
    return GaussianRational::parse(need_string(j, "a scalar"));
}

AlgebraicValue algebraic_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected an array of {coeff, pow2} objects");
    AlgebraicValue v;
    for (const auto& item : j) {
        if (!item.is_object() || !item.contains("coeff") || !item.contains("pow2"))
            throw ParseError("each component needs coeff and pow2");
        v += AlgebraicValue::monomial(gaussian_from_json(item.at("coeff")),
                                      rational_from_json(item.at("pow2")));
    }
    return v;
}

Term term_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("coeff") || !j.contains("a") || !j.contains("b"))
        throw ParseError("a term needs coeff, a, and b");
    return Term{gaussian_from_json(j.at("coeff")), rational_from_json(j.at("a")),
                rational_from_json(j.at("b"))};
}

TermList termlist_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected an array of terms");
    TermList out;
    for (const auto& item : j) out.push_back(term_from_json(item));
    return collect(std::move(out));
}

double preview_real(const AlgebraicValue& v) { return embed_real(v, 64).to_double(); }

} // namespace jacobi
