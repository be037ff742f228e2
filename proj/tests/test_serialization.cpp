#include "doctest.h"

#include "jacobi/errors.hpp"
#include "jacobi/serialize.hpp"

using namespace jacobi;

namespace {

const Params kP{Rational(1, 2), Rational(2, 5)};

} // namespace

TEST_CASE("rational serialization is canonical and round trips") {
    CHECK(to_json(Rational(6, -4)) == Json("-3/2"));
    CHECK(to_json(Rational(5)) == Json("5"));
    CHECK(rational_from_json(to_json(Rational(-22, 7))) == Rational(-22, 7));
    CHECK(rational_from_json(Json("4/6")) == Rational(2, 3));
    CHECK_THROWS_AS(rational_from_json(Json("3/0")), ParseError);
    CHECK_THROWS_AS(rational_from_json(Json("two")), ParseError);
    CHECK_THROWS_AS(rational_from_json(Json(nullptr)), ParseError);
}

TEST_CASE("gaussian serialization round trips through text") {
    const GaussianRational z(Rational(1, 2), Rational(-3, 4));
    CHECK(gaussian_from_json(to_json(z)) == z);
    CHECK(gaussian_from_json(to_json(GaussianRational::i())) == GaussianRational::i());
    const GaussianRational real_only(Rational(7, 3));
    CHECK(gaussian_from_json(to_json(real_only)) == real_only);
    CHECK_THROWS_AS(gaussian_from_json(Json("1+")), ParseError);
}

TEST_CASE("algebraic values keep exact radical structure") {
    const AlgebraicValue v = AlgebraicValue::monomial(GaussianRational(Rational(-1, 2)), Rational(7, 5)) +
                             AlgebraicValue(GaussianRational(Rational(0), Rational(3)));
    const Json j = to_json(v);
    REQUIRE(j.is_array());
    CHECK(algebraic_from_json(j) == v);
    CHECK(to_json(AlgebraicValue()).is_array());
    CHECK(algebraic_from_json(to_json(AlgebraicValue())) == AlgebraicValue());
    CHECK_THROWS_AS(algebraic_from_json(Json::parse(R"([{"coeff": "1"}])")), ParseError);
}

TEST_CASE("terms and term lists round trip exactly") {
    const Term t(GaussianRational(Rational(2, 3), Rational(1)), Rational(-1, 2), Rational(7, 5));
    const Json j = to_json(t);
    CHECK(j.at("a") == Json("-1/2"));
    CHECK(j.at("b") == Json("7/5"));
    const Term back = term_from_json(j);
    CHECK(back.coeff == t.coeff);
    CHECK(back.a == t.a);
    CHECK(back.b == t.b);

    const TermList list = jacobi_poly(3, kP).global_terms.value();
    CHECK(identical(termlist_from_json(to_json(list)), list));
    CHECK_THROWS_AS(term_from_json(Json::parse(R"({"coeff": "1"})")), ParseError);
    CHECK_THROWS_AS(termlist_from_json(Json::parse(R"({"not": "array"})")), ParseError);
}

TEST_CASE("term functions expose both germs and the optional global form") {
    const Json with_global = to_json(jacobi_poly(2, kP));
    CHECK(with_global.contains("germ_minus"));
    CHECK(with_global.contains("germ_plus"));
    CHECK(with_global.at("global").is_array());

    const Json germ_only = to_json(psi(0, Endpoint::PlusOne, kP));
    CHECK(germ_only.at("global").is_null());
    CHECK(germ_only.at("germ_minus").empty());
    CHECK_FALSE(germ_only.at("germ_plus").empty());
}

TEST_CASE("derived forms and evaluations serialize with exact payloads") {
    const SymmetricForm form = derive_symmetric_coefficients(2, Params{Rational(0), Rational(0)});
    const Json jf = to_json(form);
    CHECK(jf.at("n") == Json(2));
    CHECK(jf.at("C") == Json::parse(R"(["2", "1"])"));

    const SesquiResult r =
        sesqui_eval(phi(0, Endpoint::PlusOne), psi(0, Endpoint::PlusOne, kP), 1, kP);
    const Json jr = to_json(r);
    CHECK(jr.at("at_plus").at("tag") == Json("Finite"));
    CHECK(jr.at("at_minus").at("tag") == Json("Zero"));
    CHECK_FALSE(jr.at("at_minus").contains("value"));
    CHECK(algebraic_from_json(jr.at("full")) == r.full);

    const Json je = to_json(CatalogEntry{"phi+:0", phi(0, Endpoint::PlusOne)});
    CHECK(je.at("name") == Json("phi+:0"));
    CHECK(je.at("fn").at("global").is_null());
}

TEST_CASE("float preview tracks the embedded value") {
    const AlgebraicValue v = AlgebraicValue::monomial(GaussianRational(Rational(-1, 2)), Rational(7, 5));
    CHECK(preview_real(v) == doctest::Approx(-0.5 * std::pow(2.0, 1.4)).epsilon(1e-12));
}
