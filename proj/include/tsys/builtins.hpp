#pragma once

// The bundled systems, registered on first use, plus sampled-grid axiom
// verification for the parametric (non-enumerable) carriers.

#include "hypergroup.hpp"
#include "instances.hpp"
#include "phase.hpp"

namespace tsys {

inline void register_builtins() {
    if (find_system("sign")) return;
    make_sign();
    make_boolean();
    make_boolean_supertropical();
    make_suptrop_chain(2);
    make_suptrop_chain(3);
    make_suptrop_chain(4);
    make_zn_layered(2);
    make_zn_layered(3);
    make_zn_layered(4);
    make_truncated(2, 1);
    make_truncated(5, 2);
    make_truncated(9, 1);
    make_gf4();
    powerset_system(make_krasner_hyp(), "krasner-powerset");
    powerset_system(make_sign_hyp(), "sign-hyp-powerset");
    powerset_system(make_trop_chain_hyp(2), "tropchain2-powerset");
    powerset_system(make_trop_chain_hyp(3), "tropchain3-powerset");
    make_system<PhaseSys>(12); // "phase12"
    make_system<PhaseSys>(0);  // "phase"
    make_system<MaxPlusSys>();
    make_system<SupertropicalSys>();
    make_system<NLayeredSys>();
    make_system<EltSys>();
    make_system<SymMaxPlusSys>();
    make_system<TriangleSys>(true);
    make_system<TriangleSys>(false);
}

inline System& builtin(const std::string& name) {
    register_builtins();
    System* s = find_system(name);
    if (!s) throw std::invalid_argument("no bundled system named '" + name + "'");
    return *s;
}

// Representative finite grids for the parametric carriers.
inline std::vector<Elem> sample_pool(const System& S) {
    if (S.enumerable) return S.carrier();
    std::vector<Elem> out;
    std::vector<Rat> mags = {Rat(-2), Rat(-1), Rat(-1, 2), Rat(0), Rat(1), Rat(2)};
    if (auto* mp = dynamic_cast<const MaxPlusSys*>(&S)) {
        out.push_back(mp->zero());
        for (const Rat& v : mags) out.push_back(Elem(S.id, MaxV{false, v}));
    } else if (auto* st = dynamic_cast<const SupertropicalSys*>(&S)) {
        out.push_back(st->zero());
        for (const Rat& v : mags) {
            out.push_back(st->tangible_of(v));
            out.push_back(st->ghost_of(v));
        }
    } else if (auto* ly = dynamic_cast<const NLayeredSys*>(&S)) {
        out.push_back(ly->zero());
        for (long long l = 1; l <= 4; ++l)
            for (const Rat& v : {Rat(-1), Rat(0), Rat(2)}) out.push_back(ly->of(l, v));
    } else if (auto* el = dynamic_cast<const EltSys*>(&S)) {
        out.push_back(el->zero());
        for (const Rat& c : {Rat(-2), Rat(0), Rat(1), Rat(3)})
            for (const Rat& v : {Rat(-1), Rat(0), Rat(2)}) out.push_back(el->mk(false, c, v));
    } else if (auto* sy = dynamic_cast<const SymMaxPlusSys*>(&S)) {
        out.push_back(sy->zero());
        for (int tag : {SymV::Pos, SymV::Neg, SymV::Bal})
            for (const Rat& v : {Rat(-1), Rat(0), Rat(2)}) out.push_back(sy->of(tag, v));
    } else if (auto* tr = dynamic_cast<const TriangleSys*>(&S)) {
        out.push_back(tr->zero());
        for (const Rat& v : {Rat(1), Rat(2), Rat(3)}) out.push_back(tr->point(v));
        out.push_back(tr->mk(Rat(0), Rat(2)));
        out.push_back(tr->mk(Rat(1), Rat(2)));
        out.push_back(tr->mk(Rat(1), Rat(4)));
        out.push_back(tr->mk(Rat(2), Rat(3)));
    } else {
        throw std::invalid_argument(S.name + ": no sample grid available");
    }
    return out;
}

// Axiom verification over a finite pool (exhaustive when the pool is the
// whole carrier).
inline VerifyReport verify_system(const System& S, const std::vector<Elem>& pool) {
    VerifyReport r;
    auto nm = [&](const Elem& e) { return S.str(e); };
    for (const Elem& a : pool)
        for (const Elem& b : pool) {
            if (!(S.add(a, b) == S.add(b, a)))
                r.error("addition not commutative at (" + nm(a) + "," + nm(b) + ")");
            if (!(S.neg(S.add(a, b)) == S.add(S.neg(a), S.neg(b))))
                r.error("negation not additive at (" + nm(a) + "," + nm(b) + ")");
            for (const Elem& c : pool) {
                if (!(S.add(S.add(a, b), c) == S.add(a, S.add(b, c)))) {
                    r.error("addition not associative at (" + nm(a) + "," + nm(b) + "," +
                            nm(c) + ")");
                    return r;
                }
                if (S.has_mul &&
                    !(S.mul(a, S.add(b, c)) == S.add(S.mul(a, b), S.mul(a, c)))) {
                    if (S.surpass_kind == SurpassKind::circ) {
                        r.error("product not distributive at (" + nm(a) + "," + nm(b) + "," +
                                nm(c) + ")");
                        return r;
                    }
                }
            }
            if (S.has_mul) {
                if (!(S.mul(a, b) == S.mul(b, a)))
                    r.error("product not commutative at (" + nm(a) + "," + nm(b) + ")");
                if (!(S.mul(S.neg(a), b) == S.neg(S.mul(a, b))))
                    r.error("negation not multiplicative at (" + nm(a) + "," + nm(b) + ")");
                if (S.tangible(a) && S.tangible(b) && !S.tangible(S.mul(a, b)))
                    r.warn("tangibles not closed under product at (" + nm(a) + "," + nm(b) + ")");
            }
            if (r.errors.size() > 8) return r;
        }
    for (const Elem& a : pool) {
        if (!(S.neg(S.neg(a)) == a)) r.error("negation not an involution at " + nm(a));
        if (S.tangible(a)) {
            if (!S.tangible(S.neg(a))) r.error("negation leaves the tangibles at " + nm(a));
            if (S.quasi_zero(a)) {
                std::string m = "tangible " + nm(a) + " is a quasi-zero";
                if (S.pseudo) r.warn(m + " (pseudo-triple, tolerated)");
                else r.error(m);
            }
        }
        if (S.has_zero) {
            if (!(S.add(S.zero(), a) == a)) r.error("zero not neutral at " + nm(a));
            if (S.has_mul && !(S.mul(S.zero(), a) == S.zero()))
                r.error("zero not multiplicatively absorbing at " + nm(a));
        }
        if (S.has_one && S.has_mul && !(S.mul(S.one(), a) == a))
            r.error("unit is not a unit at " + nm(a));
        if (!S.quasi_zero(S.quasi(a)))
            r.error("a + (-)a not recognized as a quasi-zero at " + nm(a));
    }
    return r;
}

inline VerifyReport verify_system(const System& S) {
    if (auto* f = dynamic_cast<const FiniteSystem*>(&S)) return f->verify();
    return verify_system(S, sample_pool(S));
}

} // namespace tsys
