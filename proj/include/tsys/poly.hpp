#pragma once

// Sparse multivariate polynomials over a system: exponent vector -> coefficient.

#include <map>

#include "system.hpp"

namespace tsys {

struct Polynomial {
    const System* S = nullptr;
    int nvars = 1;
    int degree_cap = 8;
    std::map<std::vector<int>, Elem> terms;

    Polynomial() = default;
    Polynomial(const System& sys, int nv, int cap = 8)
        : S(&sys), nvars(nv), degree_cap(cap) {}

    void set(std::vector<int> exp, const Elem& c) {
        if ((int)exp.size() != nvars) throw std::invalid_argument("exponent arity mismatch");
        int tot = 0;
        for (int e : exp) {
            if (e < 0) throw std::invalid_argument("negative exponent");
            tot += e;
        }
        if (tot > degree_cap) throw std::invalid_argument("degree cap exceeded");
        if (S->has_zero && S->is_zero(c)) { terms.erase(exp); return; }
        auto it = terms.find(exp);
        if (it == terms.end()) terms.emplace(std::move(exp), c);
        else it->second = S->add(it->second, c);
    }

    int degree() const {
        int d = 0;
        for (const auto& [e, c] : terms) {
            int tot = 0;
            for (int x : e) tot += x;
            d = std::max(d, tot);
        }
        return d;
    }
};

inline Polynomial poly_add(const Polynomial& f, const Polynomial& g) {
    if (f.S != g.S || f.nvars != g.nvars)
        throw std::invalid_argument("polynomial system/arity mismatch");
    Polynomial r = f;
    for (const auto& [e, c] : g.terms) r.set(e, c);
    return r;
}

inline Polynomial poly_mul(const Polynomial& f, const Polynomial& g) {
    if (f.S != g.S || f.nvars != g.nvars)
        throw std::invalid_argument("polynomial system/arity mismatch");
    Polynomial r(*f.S, f.nvars, std::max(f.degree_cap, g.degree_cap));
    for (const auto& [ea, ca] : f.terms)
        for (const auto& [eb, cb] : g.terms) {
            std::vector<int> e(f.nvars);
            for (int i = 0; i < f.nvars; ++i) e[i] = ea[i] + eb[i];
            r.set(std::move(e), f.S->mul(ca, cb));
        }
    return r;
}

inline Polynomial poly_negate(const Polynomial& f) {
    Polynomial r = f;
    for (auto& [e, c] : r.terms) c = f.S->neg(c);
    return r;
}

inline Elem poly_eval(const Polynomial& f, const std::vector<Elem>& point) {
    if ((int)point.size() != f.nvars) throw std::invalid_argument("evaluation arity mismatch");
    const System& S = *f.S;
    bool have = false;
    Elem acc;
    for (const auto& [e, c] : f.terms) {
        Elem t = c;
        for (int i = 0; i < f.nvars; ++i)
            for (int k = 0; k < e[i]; ++k) t = S.mul(t, point[i]);
        acc = have ? S.add(acc, t) : t;
        have = true;
    }
    if (!have) {
        if (!S.has_zero) throw std::invalid_argument("empty polynomial over a system without zero");
        return S.zero();
    }
    return acc;
}

// Tangible points where the value surpasses zero.
inline std::vector<std::vector<Elem>>
systemic_roots(const Polynomial& f, const std::vector<Elem>& domain) {
    const System& S = *f.S;
    std::vector<Elem> tang;
    for (const Elem& d : domain)
        if (S.tangible(d)) tang.push_back(d);
    std::vector<std::vector<Elem>> roots;
    std::vector<size_t> pick(f.nvars, 0);
    if (tang.empty()) return roots;
    while (true) {
        std::vector<Elem> pt;
        for (size_t i : pick) pt.push_back(tang[i]);
        if (S.surpasses(poly_eval(f, pt), S.zero())) roots.push_back(pt);
        size_t r = 0;
        while (r < pick.size() && ++pick[r] == tang.size()) pick[r++] = 0;
        if (r == pick.size()) break;
    }
    return roots;
}

} // namespace tsys
