#include "doctest.h"
#include "tsys/builtins.hpp"
#include "tsys/poly.hpp"

using namespace tsys;

TEST_CASE("supertropical product of linear factors") {
    auto& S = builtin("supertropical");
    Polynomial f(S, 1), g(S, 1);
    f.set({1}, S.one());
    f.set({0}, S.parse("1"));
    g.set({1}, S.one());
    g.set({0}, S.neg(S.parse("1"))); // negation is the identity here
    Polynomial fg = poly_mul(f, g);
    CHECK(fg.terms.size() == 3);
    CHECK(S.str(fg.terms.at({2})) == "0");
    CHECK(S.str(fg.terms.at({1})) == "1^v");
    CHECK(S.str(fg.terms.at({0})) == "2");
}

TEST_CASE("systemic roots over the sign system") {
    auto& S = builtin("sign");
    Polynomial f(S, 1);
    f.set({1}, S.one());
    f.set({0}, S.parse("1"));
    auto roots = systemic_roots(f, S.carrier());
    REQUIRE(roots.size() == 1);
    CHECK(S.str(roots[0][0]) == "-1");
}

TEST_CASE("max-plus evaluation") {
    auto& S = builtin("maxplus");
    Polynomial f(S, 1);
    f.set({2}, S.one());
    f.set({0}, S.parse("3"));
    CHECK(S.str(poly_eval(f, {S.parse("5")})) == "10");
    CHECK(S.str(poly_eval(f, {S.parse("1")})) == "3");
    Polynomial empty(S, 1);
    CHECK(poly_eval(empty, {S.parse("5")}) == S.zero());
}

TEST_CASE("coefficients fold and caps hold") {
    auto& S = builtin("supertropical");
    Polynomial f(S, 2, 3);
    f.set({1, 1}, S.parse("2"));
    f.set({1, 1}, S.parse("2"));
    CHECK(S.str(f.terms.at({1, 1})) == "2^v");
    CHECK_THROWS(f.set({2, 2}, S.one()));
    CHECK_THROWS(f.set({1}, S.one()));
    Polynomial g = poly_negate(f);
    CHECK(g.terms.at({1, 1}) == S.neg(f.terms.at({1, 1})));
    CHECK(f.degree() == 2);
}
