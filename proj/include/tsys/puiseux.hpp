#pragma once

// Rational Puiseux series (finite supports) and the valuation maps into the
// bundled tropical-flavoured carriers, with a deterministic morphism checker.

#include <random>
#include <sstream>

#include "instances.hpp"

namespace tsys {

struct PuiseuxSeries {
    // strictly increasing exponents, nonzero coefficients; empty = 0
    std::vector<std::pair<Rat, Rat>> terms;

    bool is_zero() const { return terms.empty(); }
    Rat lead_exp() const { return terms.front().first; }
    Rat lead_coeff() const { return terms.front().second; }
    // magnitude convention: minus the order of vanishing
    Rat magnitude() const { return -terms.front().first; }

    void push(const Rat& e, const Rat& c) {
        if (c.is_zero()) return;
        terms.emplace_back(e, c);
    }
    void normalize() {
        std::sort(terms.begin(), terms.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<std::pair<Rat, Rat>> out;
        for (const auto& [e, c] : terms) {
            if (!out.empty() && out.back().first == e) {
                out.back().second += c;
                if (out.back().second.is_zero()) out.pop_back();
            } else {
                out.emplace_back(e, c);
            }
        }
        terms = std::move(out);
    }
};

inline PuiseuxSeries ps_add(const PuiseuxSeries& f, const PuiseuxSeries& g) {
    PuiseuxSeries r = f;
    for (const auto& [e, c] : g.terms) r.terms.emplace_back(e, c);
    r.normalize();
    return r;
}

inline PuiseuxSeries ps_neg(const PuiseuxSeries& f) {
    PuiseuxSeries r = f;
    for (auto& [e, c] : r.terms) c = -c;
    return r;
}

inline PuiseuxSeries ps_mul(const PuiseuxSeries& f, const PuiseuxSeries& g) {
    PuiseuxSeries r;
    for (const auto& [ea, ca] : f.terms)
        for (const auto& [eb, cb] : g.terms) r.terms.emplace_back(ea + eb, ca * cb);
    r.normalize();
    return r;
}

// ---- valuation maps ----------------------------------------------------

inline Elem trop_maxplus(const System& S, const PuiseuxSeries& f) {
    if (f.is_zero()) return S.zero();
    return Elem(S.id, MaxV{false, f.magnitude()});
}

inline Elem trop_supertropical(const System& S, const PuiseuxSeries& f) {
    if (f.is_zero()) return S.zero();
    return Elem(S.id, SupV{SupV::Tang, f.magnitude()});
}

inline Elem trop_layered(const System& S, const PuiseuxSeries& f) {
    if (f.is_zero()) return S.zero();
    return Elem(S.id, LayV{false, 1, f.magnitude()});
}

inline Elem trop_elt(const System& S, const PuiseuxSeries& f) {
    if (f.is_zero()) return S.zero();
    return Elem(S.id, EltV{false, f.lead_coeff(), f.magnitude()});
}

inline Elem trop_sign_symmetrized(const System& S, const PuiseuxSeries& f) {
    if (f.is_zero()) return S.zero();
    return Elem(S.id, SymV{f.lead_coeff().sgn() > 0 ? SymV::Pos : SymV::Neg, f.magnitude()});
}

struct TropTarget {
    std::string name;
    const System* S;
    Elem (*map)(const System&, const PuiseuxSeries&);
};

inline std::vector<TropTarget> trop_targets() {
    static System& mp = make_system<MaxPlusSys>();
    static System& st = make_system<SupertropicalSys>();
    static System& ly = make_system<NLayeredSys>();
    static System& el = make_system<EltSys>();
    static System& sy = make_system<SymMaxPlusSys>();
    return {
        {"maxplus", &mp, &trop_maxplus},
        {"supertropical", &st, &trop_supertropical},
        {"layered", &ly, &trop_layered},
        {"elt", &el, &trop_elt},
        {"sign_symmetrized", &sy, &trop_sign_symmetrized},
    };
}

// ---- morphism checker --------------------------------------------------

struct MorphismReport {
    uint64_t seed = 0;
    int samples = 0;
    int violations = 0;
    std::string text;
};

inline PuiseuxSeries random_series(std::mt19937& rng) {
    PuiseuxSeries f;
    uint32_t nterms = rng() % 4; // 0..3 terms; 0 gives the zero series
    for (uint32_t t = 0; t < nterms; ++t) {
        long long num = (long long)(rng() % 17) - 8; // exponent in [-4, 4] halves
        long long cmag = (long long)(rng() % 9) + 1;
        long long csign = (rng() % 2) ? 1 : -1;
        f.push(Rat(num, 2), Rat(csign * cmag));
    }
    f.normalize();
    return f;
}

inline MorphismReport check_morphism(uint64_t seed, int samples) {
    MorphismReport rep;
    rep.seed = seed;
    rep.samples = samples;
    std::ostringstream out;
    out << "seed=" << seed << " samples=" << samples << "\n";
    auto targets = trop_targets();
    std::mt19937 rng((uint32_t)seed);
    std::vector<std::pair<PuiseuxSeries, PuiseuxSeries>> pairs;
    pairs.reserve(samples);
    for (int i = 0; i < samples; ++i)
        pairs.emplace_back(random_series(rng), random_series(rng));
    for (const auto& tgt : targets) {
        const System& S = *tgt.S;
        int bad = 0;
        std::string first;
        for (const auto& [f, g] : pairs) {
            Elem vf = tgt.map(S, f), vg = tgt.map(S, g);
            Elem vsum = tgt.map(S, ps_add(f, g));
            Elem vprod = tgt.map(S, ps_mul(f, g));
            Elem vneg = tgt.map(S, ps_neg(f));
            std::string why;
            if (!S.surpasses(S.add(vf, vg), vsum))
                why = "v(f+g) not surpassed by v(f)+v(g)";
            else if (!(vprod == S.mul(vf, vg)))
                why = "v(fg) != v(f)v(g)";
            else if (!(vneg == S.neg(vf)))
                why = "v(-f) != (-)v(f)";
            else if (!f.is_zero() && (g.is_zero() || f.lead_exp() < g.lead_exp()) &&
                     !(vsum == vf))
                why = "strict dominance broken: v(f+g) != v(f)";
            if (!why.empty()) {
                ++bad;
                if (first.empty()) first = why;
            }
        }
        rep.violations += bad;
        out << tgt.name << " violations=" << bad;
        if (!first.empty()) out << " first=" << first;
        out << "\n";
    }
    out << "total_violations=" << rep.violations << "\n";
    rep.text = out.str();
    return rep;
}

} // namespace tsys
