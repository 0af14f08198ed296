#include "doctest.h"
#include "tsys/builtins.hpp"

using namespace tsys;

TEST_CASE("phase addition case table") {
    auto& S = builtin("phase");
    auto P = [&](const char* s) { return S.parse(s); };
    auto str = [&](const Elem& e) { return S.str(e); };
    CHECK(str(S.add(P("pt 0"), P("pt 1/4"))) == "arc 0 1/4");
    CHECK(str(S.add(P("pt 0"), P("pt 3/4"))) == "arc 3/4 1/4");
    CHECK(str(S.add(P("pt 0"), P("pt 1/2"))) == "tri 0");
    CHECK(str(S.add(P("pt 0"), P("pt 0"))) == "pt 0");
    CHECK(str(S.add(P("pt 1/4"), P("tri 0"))) == "semi 0");
    CHECK(str(S.add(P("arc 0 1/4"), P("arc 1/2 1/4"))) == "full");
    CHECK(str(S.add(P("semi 0"), P("semi 1/2"))) == "full");
    CHECK(str(S.add(P("semi 0"), P("pt 1/4"))) == "semi 0");
    CHECK(str(S.add(P("0"), P("arc 0 1/3"))) == "arc 0 1/3");
    CHECK(str(S.add(P("full"), P("pt 0"))) == "full");
}

TEST_CASE("phase negation and quasi-zeros") {
    auto& S = builtin("phase");
    CHECK(S.str(S.neg(S.parse("pt 1/4"))) == "pt 3/4");
    CHECK(S.str(S.neg(S.parse("arc 0 1/6"))) == "arc 1/2 1/6");
    CHECK(S.str(S.quasi(S.parse("pt 1/4"))) == "tri 1/4");
    CHECK(S.quasi_zero(S.parse("tri 1/4")));
    CHECK(S.quasi_zero(S.parse("full")));
    CHECK(!S.quasi_zero(S.parse("semi 0")));
    CHECK(S.height(S.parse("semi 0")) == 3);
    CHECK(S.height(S.parse("arc 0 1/6")) == 2);
    CHECK(S.height(S.parse("pt 1/3")) == 1);
}

TEST_CASE("phase multiplication rotates decompositions") {
    auto& S = builtin("phase");
    CHECK(S.str(S.mul(S.parse("pt 1/4"), S.parse("pt 1/4"))) == "pt 1/2");
    CHECK(S.str(S.mul(S.parse("arc 0 1/4"), S.parse("pt 1/2"))) == "arc 1/2 1/4");
    CHECK(S.str(S.mul(S.parse("tri 0"), S.parse("pt 1/4"))) == "tri 1/4");
    CHECK(S.str(S.mul(S.parse("tri 0"), S.parse("tri 0"))) == "tri 0");
    CHECK(S.mul(S.parse("full"), S.parse("pt 1/3")) == S.parse("full"));
}

TEST_CASE("grid-12 phase carrier closes up and verifies") {
    auto& S = builtin("phase-grid12");
    auto carrier = S.carrier();
    CHECK(carrier.size() == 92);
    for (const Elem& a : carrier)
        for (const Elem& b : carrier) {
            Elem s = S.add(a, b);
            bool found = false;
            for (const Elem& c : carrier)
                if (c == s) { found = true; break; }
            INFO(S.str(a), " + ", S.str(b), " = ", S.str(s));
            REQUIRE(found);
        }
    VerifyReport r = verify_system(S);
    CHECK(r.ok);
}
