#pragma once

// Table-backed finite systems, with exhaustive axiom verification.

#include <cstdint>
#include <string>
#include <vector>

#include "system.hpp"

namespace tsys {

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> errors;
    std::vector<std::string> warnings;

    void error(std::string m) { ok = false; errors.push_back(std::move(m)); }
    void warn(std::string m) { warnings.push_back(std::move(m)); }
};

struct FiniteSystem : System {
    std::vector<std::string> names;
    std::vector<std::vector<int>> addt;
    std::vector<std::vector<int>> mult; // empty when there is no product
    std::vector<int> negt;
    std::vector<char> tang;
    int zero_idx = -1;
    int one_idx = -1;

    // computed by finalize()
    std::vector<char> qz;
    std::vector<std::vector<char>> surp;

    int size() const { return (int)names.size(); }
    Elem el(int i) const { return Elem(id, FinV{i}); }
    int ix(const Elem& e) const { check(e); return e.as<FinV>().idx; }

    void finalize() {
        enumerable = true;
        has_zero = zero_idx >= 0;
        has_one = one_idx >= 0;
        has_mul = !mult.empty();
        surpass_kind = SurpassKind::circ;
        int n = size();
        qz.assign(n, 0);
        for (int c = 0; c < n; ++c) qz[addt[c][negt[c]]] = 1;
        surp.assign(n, std::vector<char>(n, 0));
        for (int b = 0; b < n; ++b) {
            surp[b][b] = 1;
            for (int c = 0; c < n; ++c) {
                int cq = addt[c][negt[c]];
                surp[addt[b][cq]][b] = 1; // b ⪯ b + c°
            }
        }
    }

    Elem add(const Elem& a, const Elem& b) const override {
        return el(addt[ix(a)][ix(b)]);
    }
    Elem neg(const Elem& a) const override { return el(negt[ix(a)]); }
    Elem mul(const Elem& a, const Elem& b) const override {
        if (mult.empty()) return System::mul(a, b);
        return el(mult[ix(a)][ix(b)]);
    }
    bool tangible(const Elem& a) const override { return tang[ix(a)] != 0; }
    bool is_zero(const Elem& a) const override { return ix(a) == zero_idx; }
    Elem zero() const override {
        if (zero_idx < 0) return System::zero();
        return el(zero_idx);
    }
    Elem one() const override {
        if (one_idx < 0) return System::one();
        return el(one_idx);
    }
    bool surpasses(const Elem& a, const Elem& b) const override {
        return surp[ix(a)][ix(b)] != 0;
    }
    bool quasi_zero(const Elem& a) const override { return qz[ix(a)] != 0; }
    std::vector<Elem> carrier() const override {
        std::vector<Elem> v;
        for (int i = 0; i < size(); ++i) v.push_back(el(i));
        return v;
    }
    std::string str(const Elem& a) const override { return names[ix(a)]; }
    Elem parse(const std::string& s) const override {
        for (int i = 0; i < size(); ++i)
            if (names[i] == s) return el(i);
        throw std::invalid_argument("'" + s + "' is not an element of " + name);
    }

    VerifyReport verify() const {
        VerifyReport r;
        int n = size();
        auto nm = [&](int i) { return names[i]; };

        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (addt[a][b] != addt[b][a]) {
                    r.error("addition not commutative at (" + nm(a) + "," + nm(b) + ")");
                    goto comm_done;
                }
    comm_done:
        for (int a = 0; a < n && r.ok; ++a)
            for (int b = 0; b < n && r.ok; ++b)
                for (int c = 0; c < n; ++c)
                    if (addt[addt[a][b]][c] != addt[a][addt[b][c]]) {
                        r.error("addition not associative at (" + nm(a) + "," + nm(b) +
                                "," + nm(c) + ")");
                        break;
                    }
        if (zero_idx >= 0) {
            for (int a = 0; a < n; ++a)
                if (addt[zero_idx][a] != a)
                    r.error("declared zero does not absorb additively at " + nm(a));
            if (tang[zero_idx]) r.error("zero declared tangible");
        }
        for (int a = 0; a < n; ++a) {
            if (negt[negt[a]] != a) r.error("negation not an involution at " + nm(a));
            if (tang[a] && !tang[negt[a]])
                r.error("negation leaves the tangibles at " + nm(a));
        }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (negt[addt[a][b]] != addt[negt[a]][negt[b]]) {
                    r.error("negation not additive at (" + nm(a) + "," + nm(b) + ")");
                    a = n; break;
                }
        if (zero_idx >= 0 && negt[zero_idx] != zero_idx)
            r.error("negation moves the zero");

        { // tangibles (plus zero) must generate everything additively
            std::vector<char> gen(n, 0);
            std::vector<int> stack;
            for (int a = 0; a < n; ++a)
                if (tang[a] || a == zero_idx) { gen[a] = 1; stack.push_back(a); }
            while (!stack.empty()) {
                int a = stack.back();
                stack.pop_back();
                for (int t = 0; t < n; ++t)
                    if (tang[t]) {
                        int s = addt[a][t];
                        if (!gen[s]) { gen[s] = 1; stack.push_back(s); }
                    }
            }
            for (int a = 0; a < n; ++a)
                if (!gen[a])
                    r.error(nm(a) + " is not a sum of tangibles");
        }

        { // tangibles may not meet the quasi-zeros unless flagged pseudo
            std::vector<char> q(n, 0);
            for (int c = 0; c < n; ++c) q[addt[c][negt[c]]] = 1;
            for (int a = 0; a < n; ++a)
                if (tang[a] && q[a]) {
                    std::string m = "tangible " + nm(a) + " is a quasi-zero";
                    if (pseudo) r.warn(m + " (pseudo-triple, tolerated)");
                    else r.error(m);
                }
        }

        if (!mult.empty()) {
            if (one_idx < 0) r.error("product given without a unit");
            else {
                for (int a = 0; a < n; ++a)
                    if (mult[one_idx][a] != a || mult[a][one_idx] != a)
                        r.error("declared unit is not a unit at " + nm(a));
                if (!tang[one_idx]) r.warn("unit is not tangible");
            }
            for (int a = 0; a < n && r.ok; ++a)
                for (int b = 0; b < n && r.ok; ++b) {
                    if (mult[a][b] != mult[b][a])
                        r.error("product not commutative at (" + nm(a) + "," + nm(b) + ")");
                    for (int c = 0; c < n; ++c) {
                        if (mult[mult[a][b]][c] != mult[a][mult[b][c]]) {
                            r.error("product not associative at (" + nm(a) + "," + nm(b) +
                                    "," + nm(c) + ")");
                            break;
                        }
                        if (mult[a][addt[b][c]] != addt[mult[a][b]][mult[a][c]]) {
                            r.error("product not distributive at (" + nm(a) + "," + nm(b) +
                                    "," + nm(c) + ")");
                            break;
                        }
                    }
                }
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    if (tang[a] && tang[b] && !tang[mult[a][b]])
                        r.warn("tangibles not closed under product at (" + nm(a) + "," +
                               nm(b) + ")");
                    if (mult[negt[a]][b] != negt[mult[a][b]]) {
                        r.error("negation not multiplicative at (" + nm(a) + "," + nm(b) + ")");
                        a = n; break;
                    }
                }
            if (zero_idx >= 0)
                for (int a = 0; a < n; ++a)
                    if (mult[zero_idx][a] != zero_idx)
                        r.error("zero not multiplicatively absorbing at " + nm(a));
        }
        return r;
    }
};

} // namespace tsys
