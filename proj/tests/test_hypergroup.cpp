#include "doctest.h"
#include "tsys/analysis.hpp"
#include "tsys/builtins.hpp"

using namespace tsys;

TEST_CASE("bundled hypergroups satisfy the canonical axioms") {
    CHECK(make_krasner_hyp().verify().ok);
    CHECK(make_sign_hyp().verify().ok);
    CHECK(make_trop_chain_hyp(2).verify().ok);
    CHECK(make_trop_chain_hyp(3).verify().ok);
    Hypergroup lopez = make_lopez_hyp();
    CHECK(!lopez.verify(false).ok);
    CHECK(lopez.verify(true).ok);
}

TEST_CASE("power-set closures have the expected sizes") {
    register_builtins();
    CHECK(builtin("krasner-powerset").carrier().size() == 3);
    CHECK(builtin("sign-hyp-powerset").carrier().size() == 4);
    CHECK(builtin("tropchain2-powerset").carrier().size() == 5);
    for (const char* nm : {"krasner-powerset", "sign-hyp-powerset",
                           "tropchain2-powerset", "tropchain3-powerset"}) {
        INFO(nm);
        CHECK(verify_system(builtin(nm)).ok);
    }
}

TEST_CASE("power-set constructions match the bundled table systems") {
    CHECK(finite_isomorphism(builtin("sign-hyp-powerset"), builtin("sign")).has_value());
    CHECK(finite_isomorphism(builtin("krasner-powerset"),
                             builtin("boolean-supertropical")).has_value());
    CHECK(finite_isomorphism(builtin("tropchain2-powerset"),
                             builtin("suptrop-chain2")).has_value());
    CHECK(!finite_isomorphism(builtin("sign"), builtin("boolean-supertropical")).has_value());
}

TEST_CASE("system -> hypergroup -> power-set round trip") {
    Hypergroup hs = system_to_hypergroup(builtin("sign"));
    CHECK(hs.verify().ok);
    CHECK(finite_isomorphism(powerset_system(hs, "sign-roundtrip"), builtin("sign"))
              .has_value());
    Hypergroup hc = system_to_hypergroup(builtin("suptrop-chain2"));
    CHECK(hc.verify().ok);
    CHECK(finite_isomorphism(powerset_system(hc, "chain2-roundtrip"),
                             builtin("suptrop-chain2")).has_value());
}

TEST_CASE("hypergroup predicates") {
    Hypergroup k = make_krasner_hyp();
    CHECK(k.property_p());
    Hypergroup s = make_sign_hyp();
    CHECK(s.property_p());
    CHECK(s.neg_closed());
    CHECK(s.neg_bipotent());
}

TEST_CASE("naive triangle product distributes weakly but not fully") {
    auto& naive = builtin("triangle");
    auto pool = sample_pool(naive);
    Counterexample full = check_distributivity(naive, false, pool);
    CHECK(full.found);
    // the frozen witness still works
    Elem a = naive.parse("3"), b = naive.parse("1"), c = naive.parse("[1, 2]");
    CHECK(!(naive.mul(naive.add(a, b), c) ==
            naive.add(naive.mul(a, c), naive.mul(b, c))));
    Counterexample weak = check_distributivity(naive, true, pool);
    CHECK(!weak.found);
    System& fixed = theorem_decomposition_product(naive);
    CHECK(fixed.name == "triangle#expanded");
    Counterexample after = check_distributivity(fixed, false, sample_pool(fixed));
    CHECK(!after.found);
}
