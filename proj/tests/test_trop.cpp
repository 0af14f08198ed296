#include "doctest.h"
#include "tsys/puiseux.hpp"

using namespace tsys;

namespace {
PuiseuxSeries series(std::initializer_list<std::pair<Rat, Rat>> ts) {
    PuiseuxSeries f;
    for (const auto& [e, c] : ts) f.push(e, c);
    f.normalize();
    return f;
}
} // namespace

TEST_CASE("valuations of 3t^(-2) + t") {
    PuiseuxSeries f = series({{Rat(-2), Rat(3)}, {Rat(1), Rat(1)}});
    auto targets = trop_targets();
    REQUIRE(targets.size() == 5);
    for (const auto& t : targets) {
        Elem v = t.map(*t.S, f);
        std::string s = t.S->str(v);
        if (t.name == "maxplus") CHECK(s == "2");
        if (t.name == "supertropical") CHECK(s == "2");
        if (t.name == "layered") CHECK(s == "(1, 2)");
        if (t.name == "elt") CHECK(s == "(3, 2)");
        if (t.name == "sign_symmetrized") CHECK(s == "(2 | -inf)");
    }
}

TEST_CASE("series arithmetic and the zero series") {
    PuiseuxSeries f = series({{Rat(0), Rat(1)}, {Rat(1), Rat(-1)}});
    PuiseuxSeries g = series({{Rat(0), Rat(-1)}});
    PuiseuxSeries s = ps_add(f, g);
    CHECK(s.terms.size() == 1);
    CHECK(s.lead_exp() == Rat(1));
    CHECK(ps_add(f, ps_neg(f)).is_zero());
    PuiseuxSeries p = ps_mul(f, g);
    CHECK(p.terms.size() == 2);
    CHECK(p.lead_coeff() == Rat(-1));
    for (const auto& t : trop_targets()) {
        Elem v = t.map(*t.S, PuiseuxSeries{});
        CHECK(t.S->is_zero(v));
    }
}

TEST_CASE("morphism check is clean and deterministic") {
    MorphismReport a = check_morphism(20260823, 300);
    CHECK(a.violations == 0);
    MorphismReport b = check_morphism(20260823, 300);
    CHECK(a.text == b.text);
    MorphismReport c = check_morphism(7, 300);
    CHECK(c.violations == 0);
    CHECK(c.text != a.text);
}
