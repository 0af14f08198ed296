#include "doctest.h"
#include "tsys/builtins.hpp"

using namespace tsys;

TEST_CASE("max-plus basics") {
    auto& S = builtin("maxplus");
    Elem a = S.parse("3"), b = S.parse("-1/2"), z = S.parse("-inf");
    CHECK(S.str(S.add(a, b)) == "3");
    CHECK(S.str(S.mul(a, b)) == "5/2");
    CHECK(S.add(z, b) == b);
    CHECK(S.mul(z, a) == S.zero());
    CHECK(S.neg(a) == a);
    CHECK(S.surpasses(a, b));
    CHECK(!S.surpasses(b, a));
    CHECK(S.height(a) == 1);
    CHECK(S.height(z) == 0);
}

TEST_CASE("supertropical: equal magnitudes go ghost") {
    auto& S = builtin("supertropical");
    Elem t1 = S.parse("1"), t2 = S.parse("2"), g1 = S.parse("1^v");
    CHECK(S.str(S.add(t1, t1)) == "1^v");
    CHECK(S.str(S.add(t1, t2)) == "2");
    CHECK(S.str(S.mul(t1, g1)) == "2^v");
    CHECK(S.quasi_zero(g1));
    CHECK(!S.quasi_zero(t1));
    CHECK(S.surpasses(g1, t1));
    CHECK(!S.surpasses(t1, g1));
    CHECK(S.height(g1) == 2);
    CHECK(S.parse("0") == S.zero());
}

TEST_CASE("layered: layers add on ties, multiply on products") {
    auto& S = builtin("nlayered");
    Elem a = S.parse("(1, 2)"), b = S.parse("(1, 2)"), c = S.parse("(3, 0)");
    CHECK(S.str(S.add(a, b)) == "(2, 2)");
    CHECK(S.str(S.add(a, c)) == "(1, 2)");
    CHECK(S.str(S.mul(a, c)) == "(3, 2)");
    CHECK(S.tangible(a));
    CHECK(!S.tangible(c));
    CHECK(S.quasi_zero(S.quasi(a)));
    CHECK(S.surpasses(S.parse("(2, 2)"), a));
    CHECK(S.surpasses(S.parse("(2, 3)"), a));
    CHECK(!S.surpasses(S.parse("(1, 3)"), a));
}

TEST_CASE("exploded layered keeps the leading coefficient") {
    auto& S = builtin("elt");
    Elem a = S.parse("(3, 2)"), b = S.parse("(-3, 2)"), c = S.parse("(1, 5)");
    CHECK(S.neg(a) == b);
    CHECK(S.str(S.add(a, b)) == "(0, 2)");
    CHECK(S.quasi_zero(S.add(a, b)));
    CHECK(S.str(S.add(a, c)) == "(1, 5)");
    CHECK(S.str(S.mul(a, c)) == "(3, 7)");
    CHECK(S.str(S.one()) == "(1, 0)");
}

TEST_CASE("symmetrized max-plus balances opposite signs") {
    auto& S = builtin("symmaxplus");
    Elem p = S.parse("(1 | -inf)"), m = S.parse("(-inf | 1)");
    CHECK(S.neg(p) == m);
    CHECK(S.str(S.add(p, m)) == "(1 | 1)");
    CHECK(S.quasi_zero(S.add(p, m)));
    CHECK(S.str(S.mul(p, m)) == "(-inf | 2)");
    CHECK(S.str(S.add(p, S.parse("(2 | -inf)"))) == "(2 | -inf)");
    CHECK(S.parse("(-inf | -inf)") == S.zero());
}

TEST_CASE("triangle intervals: third-side addition") {
    auto& S = builtin("triangle");
    Elem a = S.parse("3"), b = S.parse("1"), c = S.parse("[1, 2]");
    CHECK(S.str(S.add(a, b)) == "[2, 4]");
    CHECK(S.str(S.add(a, a)) == "[0, 6]");
    CHECK(S.quasi_zero(S.add(a, a)));
    CHECK(S.str(S.mul(a, c)) == "[3, 6]");
    CHECK(S.tangible(b));
    CHECK(!S.tangible(c));
    CHECK(S.surpasses(S.parse("[0, 6]"), a));
    // the bundled (naive) product is not fully distributive
    Elem l = S.mul(S.add(a, b), c);
    Elem r = S.add(S.mul(a, c), S.mul(b, c));
    CHECK(S.str(l) == "[2, 8]");
    CHECK(S.str(r) == "[1, 8]");
    CHECK(!(l == r));
    // the decomposition product on the same triple distributes
    auto& E = builtin("triangle-expanded");
    Elem ea = E.parse("3"), eb = E.parse("1"), ec = E.parse("[1, 2]");
    CHECK(E.mul(E.add(ea, eb), ec) ==
          E.add(E.mul(ea, ec), E.mul(eb, ec)));
}

TEST_CASE("finite builders verify") {
    for (const char* nm : {"sign", "boolean", "boolean-supertropical", "suptrop-chain2",
                           "suptrop-chain3", "suptrop-chain4", "zn2", "zn3", "zn4",
                           "truncated2", "truncated5", "truncated9", "gf4"}) {
        auto& S = builtin(nm);
        VerifyReport r = verify_system(S);
        INFO(nm);
        CHECK(r.ok);
    }
}

TEST_CASE("sign tables") {
    auto& S = builtin("sign");
    CHECK(S.str(S.add(S.parse("1"), S.parse("-1"))) == "inf");
    CHECK(S.str(S.add(S.parse("1"), S.parse("1"))) == "1");
    CHECK(S.str(S.mul(S.parse("-1"), S.parse("-1"))) == "1");
    CHECK(S.str(S.neg(S.parse("1"))) == "-1");
    CHECK(S.quasi_zero(S.parse("inf")));
}

TEST_CASE("truncated layers saturate") {
    auto& S = builtin("truncated5");
    CHECK(S.str(S.add(S.parse("(1,1)"), S.parse("(1,1)"))) == "(2,1)");
    CHECK(S.str(S.add(S.parse("(4,1)"), S.parse("(3,1)"))) == "(5,1)");
    CHECK(S.str(S.add(S.parse("(4,1)"), S.parse("(1,2)"))) == "(1,2)");
    CHECK(S.tangible(S.parse("(1,2)")));
    CHECK(!S.tangible(S.parse("(2,2)")));
    auto& T = builtin("truncated9");
    CHECK(T.str(T.mul(T.parse("(3,1)"), T.parse("(4,1)"))) == "(9,1)");
    CHECK(T.height(T.parse("(9,1)"), 12) == 9);
}

TEST_CASE("parametric grids verify") {
    for (const char* nm : {"maxplus", "supertropical", "nlayered", "elt", "symmaxplus",
                           "triangle", "triangle-expanded"}) {
        auto& S = builtin(nm);
        VerifyReport r = verify_system(S);
        INFO(nm);
        CHECK(r.ok);
    }
}
