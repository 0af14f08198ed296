#include "doctest.h"
#include "tsys/rat.hpp"

using namespace tsys;

TEST_CASE("rational arithmetic stays normalized") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-3, -6) == Rat(1, 2));
    CHECK((Rat(1, 2) + Rat(1, 3)) == Rat(5, 6));
    CHECK((Rat(1, 2) * Rat(2, 3)) == Rat(1, 3));
    CHECK((Rat(1) - Rat(7, 4)) == Rat(-3, 4));
    CHECK((Rat(3, 4) / Rat(3, 2)) == Rat(1, 2));
    CHECK(-Rat(5, 7) == Rat(-5, 7));
    CHECK(Rat(0, 5).is_zero());
}

TEST_CASE("ordering, printing, parsing") {
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(Rat(-1) < Rat(0));
    CHECK(Rat(7, 2).str() == "7/2");
    CHECK(Rat(-4).str() == "-4");
    CHECK(parse_rat("3/9") == Rat(1, 3));
    CHECK(parse_rat("-2") == Rat(-2));
    CHECK(parse_rat(" 5/10 ") == Rat(1, 2));
    CHECK_THROWS(parse_rat("1/0"));
}

TEST_CASE("fractional part") {
    CHECK(mod1(Rat(5, 4)) == Rat(1, 4));
    CHECK(mod1(Rat(-1, 4)) == Rat(3, 4));
    CHECK(mod1(Rat(2)) == Rat(0));
}
