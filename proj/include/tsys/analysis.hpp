#pragma once

// Structure analysis: the classifier, the named structure-theorem checks,
// the hypergroup round trips and the fuzzy-ring bridge.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "hypergroup.hpp"
#include "phase.hpp"
#include "system.hpp"

namespace tsys {

inline std::vector<Elem> sorted_carrier(const System& S) {
    std::vector<Elem> v = S.carrier();
    std::sort(v.begin(), v.end(),
              [&](const Elem& a, const Elem& b) { return S.str(a) < S.str(b); });
    return v;
}

// Dense integer tables over a sorted enumeration, for the O(n^3)/O(n^4)
// predicate scans.
struct DenseTable {
    const System* S = nullptr;
    std::vector<Elem> els;
    int n = 0;
    std::vector<int> addt, mult, negt;
    std::vector<char> qz, tang;
    std::vector<char> surp;
    int zero = -1, one = -1;
    bool has_mul = false;

    int at(const std::vector<int>& t, int i, int j) const { return t[i * n + j]; }
    int add(int i, int j) const { return addt[i * n + j]; }
    int mul(int i, int j) const { return mult[i * n + j]; }
    bool sur(int i, int j) const { return surp[i * n + j] != 0; } // els[j] ⪯ els[i]
    int quasi(int i) const { return add(i, negt[i]); }
    std::string nm(int i) const { return S->str(els[i]); }
};

inline DenseTable build_table(const System& S) {
    DenseTable t;
    t.S = &S;
    t.els = sorted_carrier(S);
    t.n = (int)t.els.size();
    int n = t.n;
    std::map<std::string, int> index;
    for (int i = 0; i < n; ++i) index[S.str(t.els[i])] = i;
    auto ix = [&](const Elem& e) { return index.at(S.str(e)); };
    t.addt.resize(n * n);
    t.negt.resize(n);
    t.qz.resize(n);
    t.tang.resize(n);
    t.surp.resize(n * n);
    t.has_mul = S.has_mul;
    if (t.has_mul) t.mult.resize(n * n);
    for (int i = 0; i < n; ++i) {
        t.negt[i] = ix(S.neg(t.els[i]));
        t.qz[i] = S.quasi_zero(t.els[i]);
        t.tang[i] = S.tangible(t.els[i]);
        for (int j = 0; j < n; ++j) {
            t.addt[i * n + j] = ix(S.add(t.els[i], t.els[j]));
            t.surp[i * n + j] = S.surpasses(t.els[i], t.els[j]);
            if (t.has_mul) t.mult[i * n + j] = ix(S.mul(t.els[i], t.els[j]));
        }
    }
    if (S.has_zero) t.zero = ix(S.zero());
    if (S.has_one) t.one = ix(S.one());
    return t;
}

// -------------------------------------------------------------------------
// Classifier.

struct Classification {
    std::string kind;      // first / second / mixed
    int characteristic = 0;
    int height = -1;       // max element height; -1 = exceeds the bound
    bool meta_tangible = false;
    bool neg_bipotent = false;
    bool idempotent = false;
    bool unique_quasi_negatives = false;
    bool t_reversible = false;
    bool t_strongly_negated = false;
    bool strongly_negated = false;
    bool fuzzy_property = false;
    bool circ_ub = false;
    std::string e, e_prime;
    std::string case_label;
    std::vector<std::string> absorbing_elements;
    std::map<std::string, std::string> witnesses;
};

inline Classification classify(const System& S, int height_bound = 12) {
    DenseTable t = build_table(S);
    int n = t.n;
    Classification c;
    auto wit = [&](const std::string& key, const std::string& w) {
        if (!c.witnesses.count(key)) c.witnesses[key] = w;
    };

    bool any_fixed = false, any_moved = false;
    for (int a = 0; a < n; ++a)
        if (t.tang[a]) (t.negt[a] == a ? any_fixed : any_moved) = true;
    c.kind = any_fixed && any_moved ? "mixed" : any_moved ? "second" : "first";

    int char_cap = std::max(12, 2 * n + 2);
    for (int k = 1; k <= char_cap && c.characteristic == 0; ++k) {
        bool all = true;
        for (int a = 0; a < n && all; ++a) {
            int s = a;
            for (int i = 0; i < k; ++i) s = t.add(s, a);
            all = s == a;
        }
        if (all) c.characteristic = k;
    }

    c.height = 0;
    for (int a = 0; a < n; ++a) {
        int h = S.height(t.els[a], std::max(height_bound, n));
        if (h < 0) { c.height = -1; break; }
        c.height = std::max(c.height, h);
    }

    c.idempotent = true;
    for (int a = 0; a < n; ++a)
        if (t.add(a, a) != a) {
            c.idempotent = false;
            wit("idempotent", t.nm(a));
            break;
        }

    c.meta_tangible = true;
    c.neg_bipotent = true;
    c.unique_quasi_negatives = true;
    for (int a = 0; a < n; ++a) {
        if (!t.tang[a]) continue;
        for (int b = 0; b < n; ++b) {
            if (!t.tang[b]) continue;
            int s = t.add(a, b);
            if (c.meta_tangible && !t.tang[s] && !t.qz[s]) {
                c.meta_tangible = false;
                wit("meta_tangible", t.nm(a) + " + " + t.nm(b) + " = " + t.nm(s));
            }
            if (c.neg_bipotent && b != t.negt[a] && s != a && s != b) {
                c.neg_bipotent = false;
                wit("neg_bipotent", t.nm(a) + " + " + t.nm(b) + " = " + t.nm(s));
            }
            if (c.unique_quasi_negatives && t.qz[s] && b != t.negt[a]) {
                c.unique_quasi_negatives = false;
                wit("unique_quasi_negatives", t.nm(a) + " + " + t.nm(b) + " = " + t.nm(s));
            }
        }
    }

    c.t_reversible = true;
    for (int a = 0; a < n && c.t_reversible; ++a) {
        if (!t.tang[a]) continue;
        for (int b = 0; b < n && c.t_reversible; ++b) {
            if (!t.tang[b]) continue;
            for (int d = 0; d < n; ++d)
                if (t.sur(t.add(b, d), a) && !t.sur(t.add(a, t.negt[d]), b)) {
                    c.t_reversible = false;
                    wit("t_reversible",
                        t.nm(a) + " below " + t.nm(b) + " + " + t.nm(d) + " but " + t.nm(b) +
                            " not below " + t.nm(a) + " + (-)" + t.nm(d));
                    break;
                }
        }
    }

    // b above zero means b = 0 + c-deg, i.e. b is a quasi-zero.  This reading
    // covers carriers without a zero element, and on set-ordered carriers it
    // keeps out hull shapes that merely contain 0 without being a + (-)a.
    auto above0 = [&](int i) { return (bool)t.qz[i]; };
    c.t_strongly_negated = true;
    c.strongly_negated = true;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!above0(t.add(a, b))) continue;
            if (c.t_strongly_negated && t.tang[a] && !t.sur(b, t.negt[a])) {
                c.t_strongly_negated = false;
                wit("t_strongly_negated", t.nm(a) + " + " + t.nm(b) + " above zero, (-)" +
                                              t.nm(a) + " not below " + t.nm(b));
            }
            bool both0 = above0(a) && above0(b);
            if (c.strongly_negated && !both0 && !t.sur(b, t.negt[a]) &&
                !t.sur(a, t.negt[b])) {
                c.strongly_negated = false;
                wit("strongly_negated", t.nm(a) + " + " + t.nm(b));
            }
        }

    if (t.has_mul) {
        c.fuzzy_property = true;
        for (int a1 = 0; a1 < n && c.fuzzy_property; ++a1)
            for (int b1 = 0; b1 < n && c.fuzzy_property; ++b1) {
                if (!t.qz[t.add(a1, t.negt[b1])]) continue;
                for (int a2 = 0; a2 < n && c.fuzzy_property; ++a2)
                    for (int b2 = 0; b2 < n; ++b2) {
                        if (!t.qz[t.add(a2, t.negt[b2])]) continue;
                        if (!t.qz[t.add(t.mul(a1, a2), t.negt[t.mul(b1, b2)])]) {
                            c.fuzzy_property = false;
                            wit("fuzzy_property", t.nm(a1) + "," + t.nm(b1) + "," + t.nm(a2) +
                                                      "," + t.nm(b2));
                            break;
                        }
                    }
            }
    }

    c.circ_ub = true;
    for (int a = 0; a < n && c.circ_ub; ++a)
        for (int b = 0; b < n && c.circ_ub; ++b) {
            if (!t.qz[b]) continue;
            for (int d = 0; d < n; ++d) {
                if (!t.qz[d]) continue;
                if (t.add(t.add(a, b), d) == a && t.add(a, b) != a) {
                    c.circ_ub = false;
                    wit("circ_ub", t.nm(a) + " + " + t.nm(b) + " + " + t.nm(d));
                    break;
                }
            }
        }

    if (t.one >= 0) {
        int e = t.quasi(t.one);
        int ep = t.add(e, t.one);
        c.e = t.nm(e);
        c.e_prime = t.nm(ep);
        if (!c.meta_tangible) c.case_label = "not-meta-tangible";
        else if (c.neg_bipotent) c.case_label = "bipotent";
        else if (ep == t.one)
            c.case_label = c.kind == "first" ? "e-prime-one-first-kind"
                                             : "e-prime-one-second-kind";
        else if (ep == e) c.case_label = "e-prime-e";
        else c.case_label = "exceptional";
    } else {
        c.case_label = "no-unit";
    }

    if (t.has_mul)
        for (int d = 0; d < n; ++d) {
            bool full = true, tonly = t.tang[d];
            for (int a = 0; a < n; ++a) {
                if (a != t.zero && t.mul(a, d) != d) full = false;
                if (t.tang[a] && t.mul(a, d) != d) tonly = false;
            }
            if (full) c.absorbing_elements.push_back(t.nm(d));
            else if (tonly && t.tang[d]) c.absorbing_elements.push_back(t.nm(d) + " (T-absorbing)");
        }

    return c;
}

// -------------------------------------------------------------------------
// Named structure-theorem checks.

struct TheoremResult {
    std::string id;
    std::string verdict; // pass / fail / hypotheses-not-met
    std::string witness;
};

inline const std::vector<std::string>& theorem_ids() {
    static const std::vector<std::string> ids = {
        "trichotomy",       "pairwise-cases",        "absorption-shift",
        "quasi-zero-preorder", "congruence-quotient", "height2-equivalence",
        "dichotomy",        "uniform-presentation",  "presentation-uniqueness",
        "distributivity",   "surpassing-circ",       "fuzzy-product",
        "reversibility",    "strong-negation",
    };
    return ids;
}

inline TheoremResult check_theorem(const System& S, const std::string& id) {
    DenseTable t = build_table(S);
    Classification c = classify(S);
    int n = t.n;
    TheoremResult res{id, "pass", ""};
    auto nm = [&](int i) { return t.nm(i); };
    auto fail = [&](const std::string& w) {
        if (res.verdict == "pass") { res.verdict = "fail"; res.witness = w; }
    };
    auto skip = [&](const std::string& why) {
        res.verdict = "hypotheses-not-met";
        res.witness = why;
        return res;
    };
    auto times = [&](int m, int a) {
        int s = a;
        for (int i = 1; i < m; ++i) s = t.add(s, a);
        return s;
    };
    bool mt = c.meta_tangible && !S.pseudo;

    if (id == "trichotomy") {
        if (!mt || t.one < 0) return skip("needs a meta-tangible triple with a unit");
        int e = t.quasi(t.one), ep = t.add(e, t.one);
        bool case1 = ep == t.one, case2 = ep == e;
        bool case3 = t.negt[t.one] == t.one && ep == times(3, t.one) &&
                     S.height(t.els[ep], std::max(12, n)) >= 3;
        if (!case1 && !case2 && !case3) fail("e' = " + nm(ep));
    } else if (id == "pairwise-cases") {
        if (!mt) return skip("needs a meta-tangible triple");
        for (int a = 0; a < n; ++a) {
            if (!t.tang[a]) continue;
            for (int b = 0; b < n; ++b) {
                if (!t.tang[b]) continue;
                bool i1 = a == t.negt[b];
                bool i2 = t.add(a, b) == a;
                bool i3 = t.add(t.quasi(a), b) == b;
                if (!i1 && !i2 && !i3) fail(nm(a) + ", " + nm(b) + ": no case holds");
                if (!i1 && t.add(t.quasi(a), b) == t.quasi(a) && i3)
                    fail(nm(a) + ", " + nm(b) + ": cases (ii) and (iii) together");
            }
        }
    } else if (id == "absorption-shift") {
        if (!mt) return skip("needs a meta-tangible triple");
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (!t.tang[a] || !t.tang[b] || a == b) continue;
                if (t.add(a, b) == b && t.add(a, t.negt[b]) != t.negt[b])
                    fail(nm(a) + " + " + nm(b) + " = " + nm(b) + " but shift fails");
            }
    } else if (id == "quasi-zero-preorder") {
        if (!mt) return skip("needs a meta-tangible triple");
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (!t.tang[a] || !t.tang[b]) continue;
                int qa = t.quasi(a), qb = t.quasi(b);
                int s = t.add(qa, qb);
                if (s != qa && s != qb && s != t.add(qa, qa) && s != t.add(qb, qb))
                    fail(nm(a) + "deg + " + nm(b) + "deg = " + nm(s));
            }
    } else if (id == "congruence-quotient") {
        if (!mt) return skip("needs a meta-tangible system");
        for (int a1 = 0; a1 < n; ++a1)
            for (int a2 = 0; a2 < n; ++a2) {
                if (t.quasi(a1) != t.quasi(a2)) continue;
                for (int b = 0; b < n; ++b) {
                    if (t.quasi(t.add(a1, b)) != t.quasi(t.add(a2, b)))
                        fail("additive congruence breaks at " + nm(a1) + "~" + nm(a2) +
                             " + " + nm(b));
                    if (t.has_mul && t.quasi(t.mul(a1, b)) != t.quasi(t.mul(a2, b)))
                        fail("multiplicative congruence breaks at " + nm(a1) + "~" + nm(a2) +
                             " * " + nm(b));
                }
            }
        // quotient is (-)-bipotent of first kind
        for (int a = 0; a < n; ++a) {
            if (t.quasi(a) != t.quasi(t.negt[a]))
                fail("quotient not of first kind at " + nm(a));
            if (!t.tang[a]) continue;
            for (int b = 0; b < n; ++b) {
                if (!t.tang[b]) continue;
                int s = t.quasi(t.add(a, b));
                if (s != t.quasi(a) && s != t.quasi(b))
                    fail("quotient not bipotent at " + nm(a) + ", " + nm(b));
            }
        }
    } else if (id == "height2-equivalence") {
        if (t.one < 0) return skip("needs a unit");
        bool s1 = true; // T u T-deg (u zero) covers the carrier
        for (int a = 0; a < n && s1; ++a) {
            if (t.tang[a] || a == t.zero) continue;
            bool hit = false;
            for (int b = 0; b < n && !hit; ++b)
                if (t.tang[b] && t.quasi(b) == a) hit = true;
            s1 = hit;
        }
        bool s2 = mt && c.height >= 0 && c.height <= 2;
        int e = t.quasi(t.one), ep = t.add(e, t.one);
        bool s3 = mt && (ep == t.one || ep == e);
        if (s1 != s2 || s2 != s3)
            fail("statements disagree: " + std::to_string(s1) + "/" + std::to_string(s2) +
                 "/" + std::to_string(s3));
    } else if (id == "dichotomy") {
        if (!mt) return skip("needs a meta-tangible triple");
        if (t.one < 0) return skip("needs a unit");
        int e = t.quasi(t.one), ep = t.add(e, t.one);
        if (c.neg_bipotent) {
            // case (i)
        } else if (ep == t.one) {
            if (c.kind == "first" && !(c.characteristic == 2 && c.height <= 2 && c.height >= 0))
                fail("first kind with e' = 1 but characteristic " +
                     std::to_string(c.characteristic) + ", height " + std::to_string(c.height));
        } else {
            fail("neither bipotent nor e' = 1; e' = " + nm(ep));
        }
    } else if (id == "uniform-presentation") {
        if (!mt) return skip("needs a meta-tangible triple");
        for (int a = 0; a < n; ++a) {
            int h = S.height(t.els[a], std::max(12, n));
            if (h <= 1) continue;
            bool found = false;
            for (int b = 0; b < n && !found; ++b) {
                if (!t.tang[b]) continue;
                if (h == 2 ? t.quasi(b) == a : times(h, b) == a) found = true;
            }
            if (!found) fail(nm(a) + " (height " + std::to_string(h) + ") not uniform");
        }
    } else if (id == "presentation-uniqueness") {
        if (!mt || !c.neg_bipotent) return skip("needs a bipotent meta-tangible system");
        for (int a = 0; a < n; ++a) {
            int h = S.height(t.els[a], std::max(12, n));
            if (h <= 0 || h == 2) continue;
            int count = 0;
            std::string who;
            for (int b = 0; b < n; ++b)
                if (t.tang[b] && times(h, b) == a) {
                    ++count;
                    who += (who.empty() ? "" : ", ") + nm(b);
                }
            if (count != 1)
                fail(nm(a) + " has " + std::to_string(count) + " presentations: " + who);
        }
    } else if (id == "distributivity") {
        if (!mt) return skip("needs a meta-tangible triple");
        if (!t.has_mul) return skip("needs multiplication");
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int d = 0; d < n; ++d)
                    if (t.mul(t.add(a, b), d) != t.add(t.mul(a, d), t.mul(b, d)))
                        fail("(" + nm(a) + " + " + nm(b) + ") * " + nm(d));
    } else if (id == "surpassing-circ") {
        if (!mt) return skip("needs a meta-tangible triple");
        // b1 below b2  iff  b2 = b1 + c-deg for some c: the precomputed relation
        for (int b1 = 0; b1 < n; ++b1)
            for (int b2 = 0; b2 < n; ++b2) {
                if (!t.sur(b2, b1)) continue;
                if (!t.sur(t.negt[b2], t.negt[b1]))
                    fail("negation not monotone at " + nm(b1) + " below " + nm(b2));
                if (t.tang[b1] && t.tang[b2] && b1 != b2)
                    fail("not equality on tangibles: " + nm(b1) + " below " + nm(b2));
                for (int d = 0; d < n; ++d) {
                    if (t.sur(d, d) && !t.sur(t.add(b2, d), t.add(b1, d)))
                        fail("not additive at " + nm(b1) + "," + nm(b2) + "," + nm(d));
                    if (t.has_mul && t.tang[d] && !t.sur(t.mul(d, b2), t.mul(d, b1)))
                        fail("not scale-stable at " + nm(b1) + "," + nm(b2) + "," + nm(d));
                }
            }
        for (int a = 0; a < n; ++a)
            if (t.tang[a])
                for (int b = 0; b < n; ++b)
                    if (t.sur(a, t.quasi(b)))
                        fail("quasi-zero " + nm(t.quasi(b)) + " below tangible " + nm(a));
        if (t.zero >= 0)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (t.tang[a] && t.tang[b] && t.sur(t.add(a, b), t.zero) && b != t.negt[a])
                        fail("zero below " + nm(a) + " + " + nm(b) + " without quasi-negation");
    } else if (id == "fuzzy-product") {
        if (!mt) return skip("needs a meta-tangible triple");
        if (!t.has_mul) return skip("needs multiplication");
        if (!c.fuzzy_property) fail(c.witnesses.count("fuzzy_property") ? c.witnesses.at("fuzzy_property") : "");
    } else if (id == "reversibility") {
        if (!mt) return skip("needs a meta-tangible system");
        bool done = false;
        for (int a = 0; a < n && !done; ++a) {
            if (!t.tang[a]) continue;
            for (int b = 0; b < n && !done; ++b) {
                if (!t.tang[b]) continue;
                for (int d = 0; d < n; ++d)
                    if (t.sur(t.add(b, d), a) && !t.sur(t.add(a, t.negt[d]), b)) {
                        fail("a=" + nm(a) + " b=" + nm(b) + " c=" + nm(d));
                        done = true;
                        break;
                    }
            }
        }
    } else if (id == "strong-negation") {
        // above zero = quasi-zero (b = 0 + c-deg), as in classify
        auto above0 = [&](int i) { return (bool)t.qz[i]; };
        bool done = false;
        for (int a = 0; a < n && !done; ++a) {
            if (!t.tang[a]) continue;
            for (int b = 0; b < n; ++b)
                if (above0(t.add(a, b)) && !t.sur(b, t.negt[a])) {
                    fail("c=" + nm(a) + " d=" + nm(b));
                    done = true;
                    break;
                }
        }
    } else {
        throw std::invalid_argument("unknown theorem id '" + id + "'");
    }
    return res;
}

inline std::vector<TheoremResult> check_all_theorems(const System& S) {
    std::vector<TheoremResult> out;
    for (const auto& id : theorem_ids()) out.push_back(check_theorem(S, id));
    return out;
}

// -------------------------------------------------------------------------
// System -> hypergroup (inverse of the power-set construction on the
// meta-tangible image): carrier = tangibles with a zero adjoined,
// a [+] (-a) = {0} u {a' tangible : a' + a-deg = a-deg}.

inline Hypergroup system_to_hypergroup(const System& S) {
    DenseTable t = build_table(S);
    if (t.zero < 0) throw std::invalid_argument(S.name + ": needs a zero");
    Hypergroup h;
    h.name = S.name + "-hyper";
    std::vector<int> tangs;
    for (int i = 0; i < t.n; ++i)
        if (t.tang[i]) tangs.push_back(i);
    int m = (int)tangs.size() + 1;
    if (m > 64) throw std::invalid_argument(S.name + ": too many tangibles");
    h.names.resize(m);
    h.names[0] = t.nm(t.zero);
    h.zero = 0;
    std::map<int, int> back;
    back[t.zero] = 0;
    for (int i = 0; i < (int)tangs.size(); ++i) {
        h.names[i + 1] = t.nm(tangs[i]);
        back[tangs[i]] = i + 1;
    }
    h.negt.resize(m);
    h.negt[0] = 0;
    for (int i = 0; i < (int)tangs.size(); ++i) h.negt[i + 1] = back.at(t.negt[tangs[i]]);
    h.addm.assign(m, std::vector<uint64_t>(m, 0));
    for (int i = 0; i < m; ++i) {
        h.addm[0][i] = h.addm[i][0] = uint64_t(1) << i;
    }
    for (int ia = 0; ia < (int)tangs.size(); ++ia)
        for (int ib = 0; ib < (int)tangs.size(); ++ib) {
            int a = tangs[ia], b = tangs[ib];
            uint64_t cell;
            if (b != t.negt[a]) {
                int s = t.add(a, b);
                if (!t.tang[s] && s != t.zero)
                    throw std::invalid_argument(S.name + ": " + t.nm(a) + " + " + t.nm(b) +
                                                " leaves the tangibles");
                cell = uint64_t(1) << back.at(s);
            } else {
                cell = uint64_t(1) << 0; // the zero
                int qa = t.quasi(a);
                for (int ic = 0; ic < (int)tangs.size(); ++ic)
                    if (t.add(tangs[ic], qa) == qa) cell |= uint64_t(1) << (ic + 1);
            }
            h.addm[ia + 1][ib + 1] = cell;
        }
    if (t.has_mul && t.one >= 0) {
        bool closed = true;
        for (int ia = 0; ia < (int)tangs.size() && closed; ++ia)
            for (int ib = 0; ib < (int)tangs.size(); ++ib)
                if (!back.count(t.mul(tangs[ia], tangs[ib]))) { closed = false; break; }
        if (closed && back.count(t.one)) {
            h.one_idx = back.at(t.one);
            h.mult.assign(m, std::vector<int>(m, 0));
            for (int i = 1; i < m; ++i)
                for (int j = 1; j < m; ++j)
                    h.mult[i][j] = back.at(t.mul(tangs[i - 1], tangs[j - 1]));
        }
    }
    return h;
}

// -------------------------------------------------------------------------
// Isomorphism of finite systems (tables, tangibles, zero/one preserved).

inline std::optional<std::vector<int>> finite_isomorphism(const System& A, const System& B) {
    DenseTable ta = build_table(A), tb = build_table(B);
    if (ta.n != tb.n || ta.has_mul != tb.has_mul) return std::nullopt;
    if ((ta.zero >= 0) != (tb.zero >= 0) || (ta.one >= 0) != (tb.one >= 0)) return std::nullopt;
    int n = ta.n;
    std::vector<int> map(n, -1), used(n, 0);
    std::function<bool(int)> place = [&](int i) -> bool {
        if (i == n) return true;
        for (int j = 0; j < n; ++j) {
            if (used[j]) continue;
            if (ta.tang[i] != tb.tang[j]) continue;
            if ((i == ta.zero) != (j == tb.zero)) continue;
            if ((i == ta.one) != (j == tb.one)) continue;
            map[i] = j;
            used[j] = 1;
            bool ok = true;
            for (int k = 0; k <= i && ok; ++k) {
                if (map[ta.negt[i]] >= 0 && map[ta.negt[i]] != tb.negt[j]) ok = false;
                if (map[k] < 0) continue;
                int s = ta.add(i, k);
                if (map[s] >= 0 && map[s] != tb.add(j, map[k])) ok = false;
                s = ta.add(k, i);
                if (map[s] >= 0 && map[s] != tb.add(map[k], j)) ok = false;
                if (ta.has_mul) {
                    s = ta.mul(i, k);
                    if (map[s] >= 0 && map[s] != tb.mul(j, map[k])) ok = false;
                }
            }
            if (ok && place(i + 1)) return true;
            map[i] = -1;
            used[j] = 0;
        }
        return false;
    };
    if (!place(0)) return std::nullopt;
    // full re-check
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (map[ta.add(i, k)] != tb.add(map[i], map[k])) return std::nullopt;
            if (ta.has_mul && map[ta.mul(i, k)] != tb.mul(map[i], map[k])) return std::nullopt;
        }
    for (int i = 0; i < n; ++i)
        if (map[ta.negt[i]] != tb.negt[map[i]]) return std::nullopt;
    return map;
}

// -------------------------------------------------------------------------
// Fuzzy-ring bridge: eps = (-)1, A0 = the quasi-zeros.

struct FuzzyView {
    bool ok = true;
    std::string eps;
    std::vector<std::string> a0;
    std::string detail;
    bool round_trip = true; // eps * a reproduces (-)a on tangibles
};

inline FuzzyView to_fuzzy(const System& S) {
    DenseTable t = build_table(S);
    FuzzyView f;
    if (!t.has_mul || t.one < 0) {
        f.ok = false;
        f.detail = "needs a multiplicative unit";
        return f;
    }
    int eps = t.negt[t.one];
    f.eps = t.nm(eps);
    for (int a = 0; a < t.n; ++a)
        if (t.qz[a]) f.a0.push_back(t.nm(a));
    auto bad = [&](const std::string& m) {
        f.ok = false;
        if (f.detail.empty()) f.detail = m;
    };
    if (t.mul(eps, eps) != t.one) bad("eps^2 != 1");
    for (int a = 0; a < t.n; ++a) {
        if (!t.tang[a]) continue;
        for (int b = 0; b < t.n; ++b) {
            if (!t.tang[b]) continue;
            bool in0 = t.qz[t.add(a, b)];
            bool epsrel = a == t.mul(eps, b);
            if (in0 != epsrel)
                bad("a1 + a2 in A0 iff a1 = eps a2 fails at " + t.nm(a) + ", " + t.nm(b));
        }
        if (t.qz[a] && !S.pseudo) bad("tangible " + t.nm(a) + " lies in A0");
    }
    for (int a = 0; a < t.n; ++a)
        for (int b = 0; b < t.n; ++b) {
            if (t.qz[a] && t.qz[b] && !t.qz[t.add(a, b)])
                bad("A0 not additively closed");
            if (t.qz[a] && !t.qz[t.mul(a, b)] && !(t.zero >= 0 && t.mul(a, b) == t.zero))
                bad("A0 not an ideal at " + t.nm(a) + " * " + t.nm(b));
        }
    for (int a = 0; a < t.n; ++a) {
        if (!t.tang[a]) continue;
        if (t.mul(eps, a) != t.negt[a]) {
            f.round_trip = false;
            if (f.detail.empty())
                f.detail = "eps * " + t.nm(a) + " = " + t.nm(t.mul(eps, a)) +
                           " differs from (-)" + t.nm(a);
        }
    }
    return f;
}

} // namespace tsys
