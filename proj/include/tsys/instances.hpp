#pragma once

// Parametric instances (max-plus, supertropical, layered, exploded-layered,
// symmetrized max-plus, triangle) and the finite table builders
// (sign, Boolean, supertropical chains, truncated / modular / GF(4) layered).

#include <sstream>

#include "finite.hpp"
#include "system.hpp"

namespace tsys {

namespace detail {
inline std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}
// split "(x, y)"-style pair on the given separator
inline bool split_pair(const std::string& s, char open, char sep, char close,
                       std::string& x, std::string& y) {
    std::string t = strip(s);
    if (t.size() < 3 || t.front() != open || t.back() != close) return false;
    t = t.substr(1, t.size() - 2);
    size_t p = t.find(sep);
    if (p == std::string::npos) return false;
    x = strip(t.substr(0, p));
    y = strip(t.substr(p + 1));
    return true;
}
} // namespace detail

// ---------------------------------------------------------------------------
// Max-plus over Q with -inf adjoined.  Negation is the identity, so every
// element is its own quasi-zero: a pseudo-triple kept around as raw material.
struct MaxPlusSys : System {
    MaxPlusSys() {
        name = "maxplus";
        has_mul = true;
        pseudo = true;
    }
    static Elem mk(int id, bool z, Rat v = Rat()) { return Elem(id, MaxV{z, v}); }
    Elem add(const Elem& a, const Elem& b) const override {
        check(a); check(b);
        const auto &x = a.as<MaxV>(), &y = b.as<MaxV>();
        if (x.zero) return b;
        if (y.zero) return a;
        return mk(id, false, max(x.v, y.v));
    }
    Elem neg(const Elem& a) const override { check(a); return a; }
    Elem mul(const Elem& a, const Elem& b) const override {
        check(a); check(b);
        const auto &x = a.as<MaxV>(), &y = b.as<MaxV>();
        if (x.zero || y.zero) return zero();
        return mk(id, false, x.v + y.v);
    }
    bool tangible(const Elem& a) const override { return !a.as<MaxV>().zero; }
    Elem zero() const override { return mk(id, true); }
    Elem one() const override { return mk(id, false, Rat(0)); }
    bool surpasses(const Elem& a, const Elem& b) const override {
        const auto &x = a.as<MaxV>(), &y = b.as<MaxV>();
        if (y.zero) return true;
        return !x.zero && y.v <= x.v;
    }
    bool quasi_zero(const Elem&) const override { return true; }
    int height(const Elem& a, int = 6) const override {
        return a.as<MaxV>().zero ? 0 : 1;
    }
    std::string str(const Elem& a) const override {
        const auto& x = a.as<MaxV>();
        return x.zero ? "-inf" : x.v.str();
    }
    Elem parse(const std::string& s) const override {
        std::string t = detail::strip(s);
        if (t == "-inf") return zero();
        return mk(id, false, parse_rat(t));
    }
};

// ---------------------------------------------------------------------------
// Supertropical: tangible and ghost copy of each rational magnitude.
struct SupertropicalSys : System {
    SupertropicalSys() { name = "supertropical"; }
    Elem mk(int tag, Rat v = Rat()) const { return Elem(id, SupV{tag, v}); }
    Elem tangible_of(Rat v) const { return mk(SupV::Tang, v); }
    Elem ghost_of(Rat v) const { return mk(SupV::Ghost, v); }
    Elem add(const Elem& a, const Elem& b) const override {
        check(a); check(b);
        const auto &x = a.as<SupV>(), &y = b.as<SupV>();
        if (x.tag == SupV::Zero) return b;
        if (y.tag == SupV::Zero) return a;
        if (x.v == y.v) return mk(SupV::Ghost, x.v);
        return x.v > y.v ? a : b;
    }
    Elem neg(const Elem& a) const override { check(a); return a; }
    Elem mul(const Elem& a, const Elem& b) const override {
        check(a); check(b);
        const auto &x = a.as<SupV>(), &y = b.as<SupV>();
        if (x.tag == SupV::Zero || y.tag == SupV::Zero) return zero();
        int tag = (x.tag == SupV::Ghost || y.tag == SupV::Ghost) ? SupV::Ghost : SupV::Tang;
        return mk(tag, x.v + y.v);
    }
    bool tangible(const Elem& a) const override { return a.as<SupV>().tag == SupV::Tang; }
    Elem zero() const override { return mk(SupV::Zero); }
    Elem one() const override { return mk(SupV::Tang, Rat(0)); }
    bool surpasses(const Elem& a, const Elem& b) const override {
        const auto &x = a.as<SupV>(), &y = b.as<SupV>();
        if (a == b) return true;
        if (x.tag != SupV::Ghost) return false;
        return y.tag == SupV::Zero || y.v <= x.v;
    }
    bool quasi_zero(const Elem& a) const override {
        return a.as<SupV>().tag != SupV::Tang;
    }
    int height(const Elem& a, int = 6) const override {
        switch (a.as<SupV>().tag) {
            case SupV::Zero: return 0;
            case SupV::Tang: return 1;
            default: return 2;
        }
    }
    std::string str(const Elem& a) const override {
        const auto& x = a.as<SupV>();
        if (x.tag == SupV::Zero) return "0";
        if (x.tag == SupV::Tang) return x.v.str();
        return x.v.str() + "^v";
    }
    Elem parse(const std::string& s) const override {
        std::string t = detail::strip(s);
        if (t == "0") return zero();
        if (t.size() > 2 && t.substr(t.size() - 2) == "^v")
            return mk(SupV::Ghost, parse_rat(t.substr(0, t.size() - 2)));
        return mk(SupV::Tang, parse_rat(t));
    }
};

// ---------------------------------------------------------------------------
// N-layered over max-plus magnitudes, zero adjoined.  Tangible = layer 1.
// The shipped surpassing relation is the coarsest layer-monotone one
// (it contains the quasi-zero relation; see the bundled docs), which is what
// valuation maps into this system need.
struct NLayeredSys : System {
    NLayeredSys() { name = "nlayered"; }
    Elem mk(bool z, long long l = 0, Rat v = Rat()) const { return Elem(id, LayV{z, l, v}); }
    Elem of(long long l, Rat v) const { return mk(false, l, v); }
    Elem add(const Elem& a, const Elem& b) const override {
        check(a); check(b);
        const auto &x = a.as<LayV>(), &y = b.as<LayV>();
        if (x.zero) return b;
        if (y.zero) return a;
        if (x.v == y.v) {
            long long l;
            if (__builtin_add_overflow(x.layer, y.layer, &l)) throw rat_overflow{};
            return mk(false, l, x.v);
        }
        return x.v > y.v ? a : b;
    }
    Elem neg(const Elem& a) const override { check(a); return a; }
    Elem mul(const Elem& a, const Elem& b) const override {
        check(a); check(b);
        const auto &x = a.as<LayV>(), &y = b.as<LayV>();
        if (x.zero || y.zero) return zero();
        long long l;
        if (__builtin_mul_overflow(x.layer, y.layer, &l)) throw rat_overflow{};
        return mk(false, l, x.v + y.v);
    }
    bool tangible(const Elem& a) const override {
        const auto& x = a.as<LayV>();
        return !x.zero && x.layer == 1;
    }
    Elem zero() const override { return mk(true); }
    Elem one() const override { return mk(false, 1, Rat(0)); }
    bool surpasses(const Elem& a, const Elem& b) const override {
        const auto &x = a.as<LayV>(), &y = b.as<LayV>();
        if (a == b) return true;
        if (x.zero) return false;
        if (y.zero) return x.layer >= 2;
        if (x.v == y.v) return x.layer > y.layer;
        return x.v > y.v && x.layer >= 2;
    }
    bool quasi_zero(const Elem& a) const override {
        const auto& x = a.as<LayV>();
        return x.zero || x.layer % 2 == 0;
    }
    int height(const Elem& a, int bound = 6) const override {
        const auto& x = a.as<LayV>();
        if (x.zero) return 0;
        return x.layer <= bound ? (int)x.layer : -1;
    }
    std::string str(const Elem& a) const override {
        const auto& x = a.as<LayV>();
        if (x.zero) return "0";
        return "(" + std::to_string(x.layer) + ", " + x.v.str() + ")";
    }
    Elem parse(const std::string& s) const override {
        std::string t = detail::strip(s), l, v;
        if (t == "0") return zero();
        if (!detail::split_pair(t, '(', ',', ')', l, v))
            throw std::invalid_argument("bad layered literal '" + s + "'");
        return mk(false, std::stoll(l), parse_rat(v));
    }
};

// ---------------------------------------------------------------------------
// Exploded layered: keeps the leading coefficient next to the magnitude.
struct EltSys : System {
    EltSys() { name = "elt"; }
    Elem mk(bool z, Rat c = Rat(), Rat v = Rat()) const { return Elem(id, EltV{z, c, v}); }
    Elem of(Rat c, Rat v) const { return mk(false, c, v); }
    Elem add(const Elem& a, const Elem& b) const override {
        check(a); check(b);
        const auto &x = a.as<EltV>(), &y = b.as<EltV>();
        if (x.zero) return b;
        if (y.zero) return a;
        if (x.v == y.v) return mk(false, x.c + y.c, x.v);
        return x.v > y.v ? a : b;
    }
    Elem neg(const Elem& a) const override {
        check(a);
        const auto& x = a.as<EltV>();
        if (x.zero) return a;
        return mk(false, -x.c, x.v);
    }
    Elem mul(const Elem& a, const Elem& b) const override {
        check(a); check(b);
        const auto &x = a.as<EltV>(), &y = b.as<EltV>();
        if (x.zero || y.zero) return zero();
        return mk(false, x.c * y.c, x.v + y.v);
    }
    bool tangible(const Elem& a) const override {
        const auto& x = a.as<EltV>();
        return !x.zero && !x.c.is_zero();
    }
    Elem zero() const override { return mk(true); }
    Elem one() const override { return mk(false, Rat(1), Rat(0)); }
    bool surpasses(const Elem& a, const Elem& b) const override {
        const auto &x = a.as<EltV>(), &y = b.as<EltV>();
        if (a == b) return true;
        if (x.zero || !x.c.is_zero()) return false;
        return y.zero || y.v < x.v;
    }
    bool quasi_zero(const Elem& a) const override {
        const auto& x = a.as<EltV>();
        return x.zero || x.c.is_zero();
    }
    int height(const Elem& a, int = 6) const override {
        const auto& x = a.as<EltV>();
        return x.zero ? 0 : x.c.is_zero() ? 2 : 1;
    }
    std::string str(const Elem& a) const override {
        const auto& x = a.as<EltV>();
        if (x.zero) return "0";
        return "(" + x.c.str() + ", " + x.v.str() + ")";
    }
    Elem parse(const std::string& s) const override {
        std::string t = detail::strip(s), c, v;
        if (t == "0") return zero();
        if (!detail::split_pair(t, '(', ',', ')', c, v))
            throw std::invalid_argument("bad exploded-layered literal '" + s + "'");
        return mk(false, parse_rat(c), parse_rat(v));
    }
};

// ---------------------------------------------------------------------------
// Symmetrized max-plus (bipotent version): a positive, negative and balanced
// copy of each magnitude, printed as a pair of max-plus components.
struct SymMaxPlusSys : System {
    SymMaxPlusSys() { name = "symmaxplus"; }
    Elem mk(int tag, Rat v = Rat()) const { return Elem(id, SymV{tag, v}); }
    Elem of(int tag, Rat v) const { return mk(tag, v); }
    Elem add(const Elem& a, const Elem& b) const override {
        check(a); check(b);
        const auto &x = a.as<SymV>(), &y = b.as<SymV>();
        if (x.tag == SymV::Zero) return b;
        if (y.tag == SymV::Zero) return a;
        if (x.v != y.v) return x.v > y.v ? a : b;
        if (x.tag == y.tag) return a;
        return mk(SymV::Bal, x.v);
    }
    Elem neg(const Elem& a) const override {
        check(a);
        const auto& x = a.as<SymV>();
        if (x.tag == SymV::Pos) return mk(SymV::Neg, x.v);
        if (x.tag == SymV::Neg) return mk(SymV::Pos, x.v);
        return a;
    }
    Elem mul(const Elem& a, const Elem& b) const override {
        check(a); check(b);
        const auto &x = a.as<SymV>(), &y = b.as<SymV>();
        if (x.tag == SymV::Zero || y.tag == SymV::Zero) return zero();
        int tag;
        if (x.tag == SymV::Bal || y.tag == SymV::Bal) tag = SymV::Bal;
        else tag = (x.tag == y.tag) ? SymV::Pos : SymV::Neg;
        return mk(tag, x.v + y.v);
    }
    bool tangible(const Elem& a) const override {
        int t = a.as<SymV>().tag;
        return t == SymV::Pos || t == SymV::Neg;
    }
    Elem zero() const override { return mk(SymV::Zero); }
    Elem one() const override { return mk(SymV::Pos, Rat(0)); }
    bool surpasses(const Elem& a, const Elem& b) const override {
        const auto &x = a.as<SymV>(), &y = b.as<SymV>();
        if (a == b) return true;
        if (x.tag != SymV::Bal) return false;
        return y.tag == SymV::Zero || y.v <= x.v;
    }
    bool quasi_zero(const Elem& a) const override {
        int t = a.as<SymV>().tag;
        return t == SymV::Zero || t == SymV::Bal;
    }
    int height(const Elem& a, int = 6) const override {
        int t = a.as<SymV>().tag;
        return t == SymV::Zero ? 0 : t == SymV::Bal ? 2 : 1;
    }
    std::string str(const Elem& a) const override {
        const auto& x = a.as<SymV>();
        switch (x.tag) {
            case SymV::Pos: return "(" + x.v.str() + " | -inf)";
            case SymV::Neg: return "(-inf | " + x.v.str() + ")";
            case SymV::Bal: return "(" + x.v.str() + " | " + x.v.str() + ")";
            default: return "(-inf | -inf)";
        }
    }
    Elem parse(const std::string& s) const override {
        std::string l, r;
        if (!detail::split_pair(s, '(', '|', ')', l, r))
            throw std::invalid_argument("bad symmetrized literal '" + s + "'");
        bool lz = l == "-inf", rz = r == "-inf";
        if (lz && rz) return zero();
        if (rz) return mk(SymV::Pos, parse_rat(l));
        if (lz) return mk(SymV::Neg, parse_rat(r));
        Rat a = parse_rat(l), b = parse_rat(r);
        if (!(a == b))
            throw std::invalid_argument("symmetrized literal outside the carrier: '" + s + "'");
        return mk(SymV::Bal, a);
    }
};

// ---------------------------------------------------------------------------
// Triangle intervals [lo, hi] in Q>=0 (possible third sides of a triangle).
// The bundled product is the naive pointwise interval product, which is only
// weakly distributive; the midpoint/half-width tangible-decomposition product
// (fully distributive) is available behind the flag.
struct TriangleSys : System {
    bool naive_product = true;
    explicit TriangleSys(bool naive = true) : naive_product(naive) {
        name = naive ? "triangle" : "triangle-expanded";
        surpass_kind = SurpassKind::subset;
    }
    Elem mk(Rat lo, Rat hi) const {
        if (lo.sgn() < 0 || hi < lo)
            throw std::invalid_argument("bad triangle interval");
        return Elem(id, TriV{lo, hi});
    }
    Elem point(Rat v) const { return mk(v, v); }
    Elem add(const Elem& a, const Elem& b) const override {
        check(a); check(b);
        const auto &x = a.as<TriV>(), &y = b.as<TriV>();
        Rat lo = max(Rat(0), max(x.lo, y.lo) - min(x.hi, y.hi));
        return mk(lo, x.hi + y.hi);
    }
    Elem neg(const Elem& a) const override { check(a); return a; }
    Elem mul(const Elem& a, const Elem& b) const override {
        check(a); check(b);
        const auto &x = a.as<TriV>(), &y = b.as<TriV>();
        if (naive_product) return mk(x.lo * y.lo, x.hi * y.hi);
        Rat two(2);
        Rat mx = (x.lo + x.hi) / two, rx = (x.hi - x.lo) / two;
        Rat my = (y.lo + y.hi) / two, ry = (y.hi - y.lo) / two;
        Elem s = point(mx * my);
        s = add(s, point(mx * ry));
        s = add(s, point(rx * my));
        s = add(s, point(rx * ry));
        return s;
    }
    bool tangible(const Elem& a) const override {
        const auto& x = a.as<TriV>();
        return x.lo == x.hi && x.lo.sgn() > 0;
    }
    Elem zero() const override { return point(Rat(0)); }
    Elem one() const override { return point(Rat(1)); }
    bool surpasses(const Elem& a, const Elem& b) const override {
        const auto &x = a.as<TriV>(), &y = b.as<TriV>();
        return x.lo <= y.lo && y.hi <= x.hi;
    }
    bool quasi_zero(const Elem& a) const override { return a.as<TriV>().lo.is_zero(); }
    int height(const Elem& a, int = 6) const override {
        const auto& x = a.as<TriV>();
        if (x.hi.is_zero()) return 0;
        return x.lo == x.hi ? 1 : 2;
    }
    std::string str(const Elem& a) const override {
        const auto& x = a.as<TriV>();
        return "[" + x.lo.str() + ", " + x.hi.str() + "]";
    }
    Elem parse(const std::string& s) const override {
        std::string t = detail::strip(s), l, h;
        if (detail::split_pair(t, '[', ',', ']', l, h))
            return mk(parse_rat(l), parse_rat(h));
        Rat v = parse_rat(t);
        return point(v);
    }
};

// ---------------------------------------------------------------------------
// Finite builders.

inline FiniteSystem& make_sign() {
    auto& s = make_system<FiniteSystem>();
    s.name = "sign";
    s.names = {"0", "1", "-1", "inf"};
    s.zero_idx = 0;
    s.one_idx = 1;
    s.tang = {0, 1, 1, 0};
    s.negt = {0, 2, 1, 3};
    // inf = 1 + (-1) soaks up everything nonzero
    s.addt = {{0, 1, 2, 3}, {1, 1, 3, 3}, {2, 3, 2, 3}, {3, 3, 3, 3}};
    s.mult = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 3, 3}};
    s.finalize();
    return s;
}

inline FiniteSystem& make_boolean() {
    auto& s = make_system<FiniteSystem>();
    s.name = "boolean";
    s.pseudo = true; // 1 + 1 = 1 = (-)1, so the only tangible is a quasi-zero
    s.names = {"0", "1"};
    s.zero_idx = 0;
    s.one_idx = 1;
    s.tang = {0, 1};
    s.negt = {0, 1};
    s.addt = {{0, 1}, {1, 1}};
    s.mult = {{0, 0}, {0, 1}};
    s.finalize();
    return s;
}

// Supertropical chain on k magnitudes: 0 < t1 < ... < tk with ghosts.
// Multiplication only exists for k = 1 (no finite ordered group otherwise).
inline FiniteSystem& make_suptrop_chain(int k, const std::string& nm = "") {
    auto& s = make_system<FiniteSystem>();
    s.name = nm.empty() ? "suptrop-chain" + std::to_string(k) : nm;
    int n = 2 * k + 1;
    s.names.resize(n);
    s.tang.assign(n, 0);
    s.negt.resize(n);
    s.names[0] = "0";
    for (int i = 1; i <= k; ++i) {
        s.names[i] = "t" + std::to_string(i);
        s.names[k + i] = "g" + std::to_string(i);
        s.tang[i] = 1;
    }
    s.zero_idx = 0;
    for (int i = 0; i < n; ++i) s.negt[i] = i;
    auto mag = [&](int i) { return i == 0 ? 0 : i <= k ? i : i - k; };
    auto ghostof = [&](int i) { return i == 0 ? 0 : i <= k ? i + k : i; };
    s.addt.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == 0) s.addt[a][b] = b;
            else if (b == 0) s.addt[a][b] = a;
            else if (mag(a) > mag(b)) s.addt[a][b] = a;
            else if (mag(a) < mag(b)) s.addt[a][b] = b;
            else s.addt[a][b] = ghostof(a);
        }
    if (k == 1) {
        s.one_idx = 1;
        s.mult = {{0, 0, 0}, {0, 1, 2}, {0, 2, 2}};
    }
    s.finalize();
    return s;
}

inline FiniteSystem& make_boolean_supertropical() {
    return make_suptrop_chain(1, "boolean-supertropical");
}

// Truncated layered: layers {1..n} with saturating addition, over a chain of
// gsize magnitudes; negation is the identity.  Layer product (saturating,
// still distributive) only when the magnitude chain is trivial.
inline FiniteSystem& make_truncated(int n, int gsize, const std::string& nm = "") {
    if (n < 2 || gsize < 1) throw std::invalid_argument("make_truncated: need n >= 2, gsize >= 1");
    auto& s = make_system<FiniteSystem>();
    s.name = nm.empty() ? "truncated" + std::to_string(n) : nm;
    int sz = n * gsize;
    auto id_of = [&](int l, int g) { return (g - 1) * n + (l - 1); }; // l in 1..n, g in 1..gsize
    s.names.resize(sz);
    s.tang.assign(sz, 0);
    s.negt.resize(sz);
    for (int g = 1; g <= gsize; ++g)
        for (int l = 1; l <= n; ++l) {
            int i = id_of(l, g);
            s.names[i] = "(" + std::to_string(l) + "," + std::to_string(g) + ")";
            s.tang[i] = l == 1;
            s.negt[i] = i;
        }
    s.addt.assign(sz, std::vector<int>(sz));
    for (int g1 = 1; g1 <= gsize; ++g1)
        for (int l1 = 1; l1 <= n; ++l1)
            for (int g2 = 1; g2 <= gsize; ++g2)
                for (int l2 = 1; l2 <= n; ++l2) {
                    int r;
                    if (g1 > g2) r = id_of(l1, g1);
                    else if (g1 < g2) r = id_of(l2, g2);
                    else r = id_of(std::min(l1 + l2, n), g1);
                    s.addt[id_of(l1, g1)][id_of(l2, g2)] = r;
                }
    if (gsize == 1) {
        s.one_idx = id_of(1, 1);
        s.mult.assign(sz, std::vector<int>(sz));
        for (int l1 = 1; l1 <= n; ++l1)
            for (int l2 = 1; l2 <= n; ++l2)
                s.mult[id_of(l1, 1)][id_of(l2, 1)] = id_of(std::min(l1 * l2, n), 1);
    }
    s.finalize();
    return s;
}

// Layers mod n over a trivial magnitude: the ring Z/n seen as a system with
// tangibles +-1.  n = 1 collapses to a single self-quasi-zero element.
inline FiniteSystem& make_zn_layered(int n, const std::string& nm = "") {
    if (n < 1) throw std::invalid_argument("make_zn_layered: need n >= 1");
    auto& s = make_system<FiniteSystem>();
    s.name = nm.empty() ? "zn" + std::to_string(n) : nm;
    s.names.resize(n);
    s.tang.assign(n, 0);
    s.negt.resize(n);
    for (int l = 0; l < n; ++l) {
        s.names[l] = "(" + std::to_string(l) + ")";
        s.tang[l] = (l == 1 % n) || (l == (n - 1) % n);
        s.negt[l] = (n - l) % n;
    }
    s.zero_idx = n == 1 ? -1 : 0;
    s.one_idx = 1 % n;
    s.pseudo = n == 1;
    if (n == 1) { s.tang = {1}; s.one_idx = 0; }
    s.addt.assign(n, std::vector<int>(n));
    s.mult.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            s.addt[a][b] = (a + b) % n;
            s.mult[a][b] = (a * b) % n;
        }
    s.finalize();
    return s;
}

// The field with four elements seen as a system: layers GF(4), negation the
// identity, tangibles the nonzero layers.  First kind, characteristic 2,
// meta-tangible but not bipotent: (1) + (w) = (w+1).
inline FiniteSystem& make_gf4() {
    auto& s = make_system<FiniteSystem>();
    s.name = "gf4";
    s.names = {"(0)", "(1)", "(w)", "(w+1)"};
    s.zero_idx = 0;
    s.one_idx = 1;
    s.tang = {0, 1, 1, 1};
    s.negt = {0, 1, 2, 3};
    s.addt.assign(4, std::vector<int>(4));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) s.addt[a][b] = a ^ b;
    s.mult = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
    s.finalize();
    return s;
}

} // namespace tsys
