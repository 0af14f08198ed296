#pragma once

// Finite hypergroups (set-valued addition tables) and the power-set system
// construction: close the singletons under setwise hyperaddition, order by
// inclusion.  Carriers are capped at 64 elements so subsets fit in a mask.

#include <cstdint>
#include <map>

#include "finite.hpp"
#include "instances.hpp"
#include "phase.hpp"

namespace tsys {

struct Hypergroup {
    std::string name;
    std::vector<std::string> names;
    int zero = -1;
    std::vector<std::vector<uint64_t>> addm; // subsets as bitmasks
    std::vector<int> negt;
    std::vector<std::vector<int>> mult; // optional, single-valued
    int one_idx = -1;
    bool noncanonical = false; // loaded with the uniqueness check waived

    int size() const { return (int)names.size(); }
    bool has_mul() const { return !mult.empty(); }

    uint64_t setsum(uint64_t s, uint64_t t) const {
        uint64_t r = 0;
        for (int a = 0; a < size(); ++a)
            if (s >> a & 1)
                for (int b = 0; b < size(); ++b)
                    if (t >> b & 1) r |= addm[a][b];
        return r;
    }

    std::string setstr(uint64_t s) const {
        std::string out = "{";
        bool first = true;
        for (int a = 0; a < size(); ++a)
            if (s >> a & 1) {
                if (!first) out += " ";
                out += names[a];
                first = false;
            }
        return out + "}";
    }

    VerifyReport verify(bool skip_unique_negation = false) const {
        VerifyReport r;
        int n = size();
        if (n > 64) { r.error("carrier too large (max 64)"); return r; }
        if (zero < 0) r.error("no zero element");
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (addm[a][b] == 0) r.error("empty cell at (" + names[a] + "," + names[b] + ")");
                if (addm[a][b] != addm[b][a]) {
                    r.error("hyperaddition not commutative at (" + names[a] + "," + names[b] + ")");
                    a = n; break;
                }
            }
        if (zero >= 0)
            for (int a = 0; a < n; ++a)
                if (addm[zero][a] != (uint64_t(1) << a)) {
                    std::string m = "zero not neutral at " + names[a];
                    if (skip_unique_negation) r.warn(m + " (waived)");
                    else r.error(m);
                }
        for (int a = 0; a < n && r.ok; ++a)
            for (int b = 0; b < n && r.ok; ++b)
                for (int c = 0; c < n; ++c) {
                    uint64_t l = setsum(addm[a][b], uint64_t(1) << c);
                    uint64_t rr = setsum(uint64_t(1) << a, addm[b][c]);
                    if (l != rr) {
                        r.error("hyperaddition not associative at (" + names[a] + "," +
                                names[b] + "," + names[c] + "): " + setstr(l) + " vs " + setstr(rr));
                        break;
                    }
                }
        for (int a = 0; a < n; ++a) {
            if (negt[negt[a]] != a) r.error("hypernegation not an involution at " + names[a]);
            for (int b = 0; b < n && zero >= 0; ++b) {
                bool has0 = (addm[a][b] >> zero) & 1;
                if (has0 != (b == negt[a])) {
                    std::string m = "hypernegative of " + names[a] + " not unique (0 " +
                                    (has0 ? "in " : "missing from ") + names[a] + " + " + names[b] + ")";
                    if (skip_unique_negation) r.warn(m + " (waived)");
                    else r.error(m);
                }
            }
        }
        // reversibility: a in b + c iff b in a + (-c)
        for (int a = 0; a < n && r.ok; ++a)
            for (int b = 0; b < n && r.ok; ++b)
                for (int c = 0; c < n; ++c) {
                    bool l = (addm[b][c] >> a) & 1;
                    bool rr = (addm[a][negt[c]] >> b) & 1;
                    if (l != rr) {
                        std::string m = "reversibility fails at (" + names[a] + "," +
                                        names[b] + "," + names[c] + ")";
                        if (skip_unique_negation) { r.warn(m + " (waived)"); }
                        else r.error(m);
                        break;
                    }
                }
        if (has_mul()) {
            if (one_idx < 0) r.error("product given without a unit");
            for (int a = 0; a < n && r.ok; ++a)
                for (int b = 0; b < n; ++b) {
                    if (mult[a][b] != mult[b][a]) { r.error("product not commutative"); break; }
                    if (one_idx >= 0 && mult[one_idx][a] != a) { r.error("unit is not a unit"); break; }
                    if (zero >= 0 && mult[zero][a] != zero) { r.error("zero not absorbing"); break; }
                    if (mult[negt[a]][b] != negt[mult[a][b]]) {
                        r.error("negation not multiplicative"); break;
                    }
                    for (int c = 0; c < n; ++c) {
                        if (mult[mult[a][b]][c] != mult[a][mult[b][c]]) {
                            r.error("product not associative"); a = b = n; break;
                        }
                        // hyperdistributivity: a(b + c) = ab + ac as sets
                        uint64_t l = 0;
                        for (int d = 0; d < n; ++d)
                            if (addm[b][c] >> d & 1) l |= uint64_t(1) << mult[a][d];
                        if (l != addm[mult[a][b]][mult[a][c]]) {
                            r.error("product not hyperdistributive at (" + names[a] + "," +
                                    names[b] + "," + names[c] + ")");
                            a = b = n; break;
                        }
                    }
                }
        }
        return r;
    }

    // a is in a + b whenever a + b is not a singleton
    bool property_p() const {
        for (int a = 0; a < size(); ++a)
            for (int b = 0; b < size(); ++b) {
                uint64_t s = addm[a][b];
                if ((s & (s - 1)) != 0 && !((s >> a) & 1)) return false;
            }
        return true;
    }
    // a + b a tangible singleton whenever b != -a (zero aside)
    bool neg_closed() const {
        for (int a = 0; a < size(); ++a)
            for (int b = 0; b < size(); ++b) {
                if (a == zero || b == zero || b == negt[a]) continue;
                uint64_t s = addm[a][b];
                if ((s & (s - 1)) != 0 || s == (uint64_t(1) << zero)) return false;
            }
        return true;
    }
    bool neg_bipotent() const {
        for (int a = 0; a < size(); ++a)
            for (int b = 0; b < size(); ++b) {
                if (a == zero || b == zero || b == negt[a]) continue;
                uint64_t s = addm[a][b];
                if (s != (uint64_t(1) << a) && s != (uint64_t(1) << b)) return false;
            }
        return true;
    }
};

// Power-set system: carrier = closure of singletons under setwise
// hyperaddition, tangibles = nonzero singletons, surpassing = inclusion.
// Multiplication (when present) extends setwise; this is exactly the
// generator-expansion product since every carrier set is a sum of singletons.
inline FiniteSystem& powerset_system(const Hypergroup& h, const std::string& nm = "") {
    VerifyReport vr = h.verify(h.noncanonical);
    if (!vr.ok)
        throw std::invalid_argument("powerset_system(" + h.name + "): " + vr.errors.front());

    std::vector<uint64_t> sets;
    std::map<uint64_t, int> index;
    auto intern = [&](uint64_t s) {
        auto it = index.find(s);
        if (it != index.end()) return it->second;
        index[s] = (int)sets.size();
        sets.push_back(s);
        return (int)sets.size() - 1;
    };
    for (int a = 0; a < h.size(); ++a) intern(uint64_t(1) << a);
    for (size_t i = 0; i < sets.size(); ++i)
        for (size_t j = 0; j <= i; ++j)
            intern(h.setsum(sets[i], sets[j]));

    auto& s = make_system<FiniteSystem>();
    s.name = nm.empty() ? h.name + "-powerset" : nm;
    int n = (int)sets.size();
    s.names.resize(n);
    s.tang.assign(n, 0);
    s.negt.resize(n);
    s.addt.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i) {
        s.names[i] = h.setstr(sets[i]);
        uint64_t m = sets[i];
        s.tang[i] = (m & (m - 1)) == 0 && (h.zero < 0 || m != (uint64_t(1) << h.zero));
        uint64_t nm2 = 0;
        for (int a = 0; a < h.size(); ++a)
            if (m >> a & 1) nm2 |= uint64_t(1) << h.negt[a];
        s.negt[i] = index.at(nm2);
        for (int j = 0; j < n; ++j) s.addt[i][j] = index.at(h.setsum(sets[i], sets[j]));
    }
    if (h.zero >= 0) s.zero_idx = index.at(uint64_t(1) << h.zero);
    if (h.has_mul()) {
        s.one_idx = index.at(uint64_t(1) << h.one_idx);
        s.mult.assign(n, std::vector<int>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                uint64_t p = 0;
                for (int a = 0; a < h.size(); ++a)
                    if (sets[i] >> a & 1)
                        for (int b = 0; b < h.size(); ++b)
                            if (sets[j] >> b & 1) p |= uint64_t(1) << h.mult[a][b];
                auto it = index.find(p);
                if (it == index.end())
                    throw std::logic_error(s.name + ": product leaves the additive closure at " +
                                           h.setstr(sets[i]) + " * " + h.setstr(sets[j]));
                s.mult[i][j] = it->second;
            }
    }
    s.finalize();
    return s;
}

// --- bundled hypergroups ---------------------------------------------------

inline Hypergroup make_krasner_hyp() {
    Hypergroup h;
    h.name = "krasner";
    h.names = {"0", "1"};
    h.zero = 0;
    h.negt = {0, 1};
    h.addm = {{1, 2}, {2, 3}}; // 1 + 1 = {0, 1}
    h.mult = {{0, 0}, {0, 1}};
    h.one_idx = 1;
    return h;
}

inline Hypergroup make_sign_hyp() {
    Hypergroup h;
    h.name = "sign-hyp";
    h.names = {"0", "1", "-1"};
    h.zero = 0;
    h.negt = {0, 2, 1};
    h.addm = {{1, 2, 4}, {2, 2, 7}, {4, 7, 4}}; // 1 + (-1) = {0, 1, -1}
    h.mult = {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}};
    h.one_idx = 1;
    return h;
}

// tropical hyperfield restricted to a finite chain 0 < g1 < ... < gk:
// a + b = max if a != b, {c : c <= a} if a = b.
inline Hypergroup make_trop_chain_hyp(int k) {
    Hypergroup h;
    h.name = "tropchain" + std::to_string(k);
    h.zero = 0;
    h.names.resize(k + 1);
    h.names[0] = "0";
    for (int i = 1; i <= k; ++i) h.names[i] = "g" + std::to_string(i);
    h.negt.resize(k + 1);
    for (int i = 0; i <= k; ++i) h.negt[i] = i;
    h.addm.assign(k + 1, std::vector<uint64_t>(k + 1));
    for (int a = 0; a <= k; ++a)
        for (int b = 0; b <= k; ++b) {
            if (a != b) h.addm[a][b] = uint64_t(1) << std::max(a, b);
            else h.addm[a][b] = (uint64_t(1) << (a + 1)) - 1; // {0, g1, ..., ga}
        }
    return h;
}

// Interval hypergroup on a finite chain: a + b = {c : min <= c <= max}.
// The hypernegative is not unique; loadable only with the check waived.
inline Hypergroup make_lopez_hyp() {
    Hypergroup h;
    h.name = "lopez";
    h.names = {"-1", "0", "1"};
    h.zero = 1;
    h.negt = {2, 1, 0};
    h.noncanonical = true;
    h.addm.assign(3, std::vector<uint64_t>(3));
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            uint64_t m = 0;
            for (int c = std::min(a, b); c <= std::max(a, b); ++c) m |= uint64_t(1) << c;
            h.addm[a][b] = m;
        }
    return h;
}

// --- generic distributivity diagnostics ------------------------------------

struct Counterexample {
    bool found = false;
    Elem a, b, c;
    std::string detail;
};

// mode full: (a+b)c == ac + bc on a carrier enumeration (or caller sample);
// mode weak: ((a+b)c) surpassed by ac + bc, tangible a, b only.
inline Counterexample check_distributivity(const System& s, bool weak,
                                           const std::vector<Elem>& pool) {
    Counterexample ce;
    for (const Elem& a : pool)
        for (const Elem& b : pool) {
            if (weak && (!s.tangible(a) || !s.tangible(b))) continue;
            Elem ab = s.add(a, b);
            for (const Elem& c : pool) {
                Elem l = s.mul(ab, c);
                Elem r = s.add(s.mul(a, c), s.mul(b, c));
                bool ok = weak ? s.surpasses(r, l) : l == r;
                if (!ok) {
                    ce.found = true;
                    ce.a = a; ce.b = b; ce.c = c;
                    ce.detail = "(" + s.str(a) + " + " + s.str(b) + ") * " + s.str(c) +
                                " = " + s.str(l) + " vs " + s.str(r);
                    return ce;
                }
            }
        }
    return ce;
}

inline Counterexample check_distributivity(const System& s, bool weak) {
    return check_distributivity(s, weak, s.carrier());
}

// Redefine multiplication through canonical tangible decompositions.
// For the triangle system this swaps the naive interval product for the
// midpoint/half-width expansion; power-set and phase systems already use it.
inline System& theorem_decomposition_product(System& s) {
    if (auto* t = dynamic_cast<TriangleSys*>(&s)) {
        if (!t->naive_product) return s;
        auto& u = make_system<TriangleSys>(false);
        u.name = s.name + "#expanded";
        return u;
    }
    return s; // already the generator-expansion product
}

} // namespace tsys
