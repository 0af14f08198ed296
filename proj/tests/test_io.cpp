#include "doctest.h"

#include <sstream>

#include "tsys/analysis.hpp"
#include "tsys/builtins.hpp"
#include "tsys/io.hpp"

using namespace tsys;

namespace {
const char* SIGN_SYS =
    "name sign-inline\n"
    "carrier 0 1 -1 inf\n"
    "tangibles 1 -1\n"
    "zero 0\n"
    "one 1\n"
    "neg 0 -1 1 inf\n"
    "add\n"
    "0 1 -1 inf\n"
    "1 1 inf inf\n"
    "-1 inf -1 inf\n"
    "inf inf inf inf\n"
    "mul\n"
    "0 0 0 0\n"
    "0 1 -1 inf\n"
    "0 -1 1 inf\n"
    "0 inf inf inf\n";
} // namespace

TEST_CASE("loading a system table") {
    std::istringstream in(SIGN_SYS);
    FiniteSystem& s = load_sys(in, "fallback");
    CHECK(s.name == "sign-inline");
    CHECK(s.verify().ok);
    CHECK(finite_isomorphism(s, builtin("sign")).has_value());
}

TEST_CASE("parse errors carry line and column") {
    std::istringstream in(
        "carrier 0 1\n"
        "tangibles 1\n"
        "neg 0 1\n"
        "add\n"
        "0 1\n"
        "1 bogus\n");
    try {
        load_sys(in, "broken");
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        CHECK(e.line == 6);
        CHECK(e.column == 3);
        CHECK(std::string(e.what()).find("bogus") != std::string::npos);
    }
    std::istringstream in2("carrier a\ntangibles a\nneg a\n");
    CHECK_THROWS_AS(load_sys(in2, "missing-add"), parse_error);
}

TEST_CASE("loading hypergroups with set cells") {
    std::istringstream in(
        "name k\n"
        "carrier 0 1\n"
        "zero 0\n"
        "one 1\n"
        "neg 0 1\n"
        "add\n"
        "{0} {1}\n"
        "{1} {0 1}\n"
        "mul\n"
        "0 0\n"
        "0 1\n");
    Hypergroup h = load_hyp(in, "fallback");
    CHECK(h.verify().ok);
    CHECK(h.addm[1][1] == 0b11);
    CHECK(finite_isomorphism(powerset_system(h, "k-ps"),
                             builtin("boolean-supertropical")).has_value());
}

TEST_CASE("loading matrices with bracketed literals") {
    std::istringstream in(
        "2 2 elt\n"
        "(3, 2) (1, 0)\n"
        "(0, 0) (1, 1)\n");
    Matrix m = load_matrix(in, [](const std::string& nm) -> const System* {
        register_builtins();
        return find_system(nm);
    });
    CHECK(m.rows == 2);
    CHECK(m.S->str(m.at(0, 0)) == "(3, 2)");
    CHECK(m.S->str(det(m)) == "(3, 3)");
    std::istringstream bad(
        "2 2 elt\n"
        "(3, 2) what\n"
        "(0, 0) (1, 1)\n");
    CHECK_THROWS_AS(load_matrix(bad, [](const std::string& nm) -> const System* {
                        return find_system(nm);
                    }),
                    parse_error);
}

TEST_CASE("key-value rendering is stable") {
    KV kv;
    kv.put("alpha", 1);
    kv.put("beta", true);
    kv.put("gamma", "x y");
    CHECK(kv.render(false) == "alpha: 1\nbeta: true\ngamma: x y\n");
    CHECK(kv.render(true) == "alpha=1\nbeta=true\ngamma=x y\n");
}
