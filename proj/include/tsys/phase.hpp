#pragma once

// Phases on the unit circle.  Angles are rational turns in [0,1).  Sums of
// phases close up over six shapes: zero, point, short arc (< half a turn),
// antipodal pair, semicircle-with-zero, full-circle-with-zero.  Addition is
// a case table on those shapes (the pointwise set extension of the two-point
// rule is not associative; the shape table is).

#include <sstream>

#include "system.hpp"

namespace tsys {

namespace phase_detail {

inline Rat half() { return Rat(1, 2); }
inline Rat antip(const Rat& a) { return mod1(a + half()); }

// is angle x on the closed arc [s, s+l]?
inline bool on_arc(const Rat& s, const Rat& l, const Rat& x) {
    return mod1(x - s) <= l;
}
// is the closed arc [s, s+l] inside the closed arc [S, S+L]?
inline bool arc_in_arc(const Rat& s, const Rat& l, const Rat& S, const Rat& L) {
    Rat d = mod1(s - S);
    return d <= L && d + l <= L;
}

inline PhaseV pzero() { return PhaseV{PhaseV::Zero, Rat(0), Rat(0)}; }
inline PhaseV pfull() { return PhaseV{PhaseV::Full0, Rat(0), Rat(0)}; }
inline PhaseV ppoint(const Rat& a) { return PhaseV{PhaseV::Point, mod1(a), Rat(0)}; }
inline PhaseV ptriple(const Rat& a) {
    Rat b = mod1(a);
    if (!(b < half())) b = b - half();
    return PhaseV{PhaseV::Triple, b, Rat(0)};
}
inline PhaseV psemi(const Rat& u) { return PhaseV{PhaseV::Semi0, mod1(u), half()}; }
inline PhaseV parc(const Rat& s, const Rat& l) {
    if (l.is_zero()) return ppoint(s);
    if (l == half()) return psemi(s);
    if (l > half()) return pfull();
    return PhaseV{PhaseV::Arc, mod1(s), l};
}

// intersection of two closed arcs, each of length <= 1/2: at most one
// component; returns false if empty.
inline bool arc_meet(const Rat& a, const Rat& la, const Rat& b, const Rat& lb,
                     Rat& s, Rat& l) {
    Rat d = mod1(b - a);
    if (d <= la) { s = b; l = min(la - d, lb); return true; }
    Rat d2 = mod1(a - b);
    if (d2 <= lb) { s = a; l = min(lb - d2, la); return true; }
    return false;
}

inline PhaseV add_point_point(const Rat& b, const Rat& c) {
    if (b == c) return ppoint(b);
    Rat d = mod1(c - b);
    if (d == half()) return ptriple(b);
    if (d < half()) return parc(b, d);
    return parc(c, Rat(1) - d);
}

inline PhaseV add_point_arc(const Rat& c, const Rat& s, const Rat& l) {
    if (on_arc(s, l, c)) return parc(s, l);
    Rat m = antip(c);
    if (!on_arc(s, l, m)) {
        Rat x = mod1(s - c);
        if (x + l < half()) return parc(c, x + l);
        return parc(s, Rat(1) - x);
    }
    if (m == s) return psemi(m);
    if (m == mod1(s + l)) return psemi(mod1(s + l - half()));
    return pfull();
}

inline PhaseV add(const PhaseV& xx, const PhaseV& yy) {
    const PhaseV* x = &xx;
    const PhaseV* y = &yy;
    if (x->shape > y->shape) std::swap(x, y);
    if (x->shape == PhaseV::Zero) return *y;
    if (y->shape == PhaseV::Full0) return pfull();

    switch (x->shape) {
        case PhaseV::Point:
            switch (y->shape) {
                case PhaseV::Point:
                    return add_point_point(x->a, y->a);
                case PhaseV::Arc:
                    return add_point_arc(x->a, y->a, y->len);
                case PhaseV::Triple: {
                    Rat d = mod1(x->a - y->a);
                    if (d.is_zero() || d == half()) return *y;
                    return d < half() ? psemi(y->a) : psemi(antip(y->a));
                }
                default: // Semi0
                    return on_arc(y->a, half(), x->a) ? *y : pfull();
            }
        case PhaseV::Arc:
            switch (y->shape) {
                case PhaseV::Arc: {
                    Rat ks, kl;
                    if (!arc_meet(x->a, x->len, antip(y->a), y->len, ks, kl)) {
                        // no antipodal pair: result is the short hull
                        Rat o2 = mod1(y->a - x->a);
                        Rat lenA = max(x->len, o2 + y->len);
                        Rat o1 = mod1(x->a - y->a);
                        Rat lenB = max(y->len, o1 + x->len);
                        Rat s = lenA <= lenB ? x->a : y->a;
                        Rat l = min(lenA, lenB);
                        if (l >= half()) return pfull(); // unreachable by construction
                        return parc(s, l);
                    }
                    if (kl.sgn() > 0) return pfull();
                    // exactly one antipodal pair {p, p+1/2}
                    const Rat& p = ks;
                    Rat q = antip(p);
                    if (arc_in_arc(x->a, x->len, p, half()) &&
                        arc_in_arc(y->a, y->len, p, half()))
                        return psemi(p);
                    if (arc_in_arc(x->a, x->len, q, half()) &&
                        arc_in_arc(y->a, y->len, q, half()))
                        return psemi(q);
                    return pfull();
                }
                case PhaseV::Triple:
                    if (arc_in_arc(x->a, x->len, y->a, half())) return psemi(y->a);
                    if (arc_in_arc(x->a, x->len, antip(y->a), half()))
                        return psemi(antip(y->a));
                    return pfull();
                default: // Semi0
                    return arc_in_arc(x->a, x->len, y->a, half()) ? *y : pfull();
            }
        case PhaseV::Triple:
            if (y->shape == PhaseV::Triple)
                return x->a == y->a ? *x : pfull();
            { // Semi0: absorbed only when the pair is the semicircle's boundary
                Rat d = mod1(x->a - y->a);
                return (d.is_zero() || d == half()) ? *y : pfull();
            }
        default: // Semi0 + Semi0
            return x->a == y->a ? *x : pfull();
    }
}

inline PhaseV negate(const PhaseV& x) {
    switch (x.shape) {
        case PhaseV::Point: return ppoint(antip(x.a));
        case PhaseV::Arc: return parc(antip(x.a), x.len);
        case PhaseV::Semi0: return psemi(antip(x.a));
        default: return x; // zero, triple and full circle are symmetric
    }
}

inline std::vector<Rat> decomp(const PhaseV& x) {
    switch (x.shape) {
        case PhaseV::Zero: return {};
        case PhaseV::Point: return {x.a};
        case PhaseV::Arc: return {x.a, mod1(x.a + x.len)};
        case PhaseV::Triple: return {x.a, antip(x.a)};
        case PhaseV::Semi0: return {x.a, mod1(x.a + Rat(1, 4)), antip(x.a)};
        default: return {Rat(0), Rat(1, 3), Rat(2, 3)};
    }
}

inline bool contains(const PhaseV& x, const PhaseV& y) {
    if (x == y) return true;
    switch (y.shape) {
        case PhaseV::Zero:
            return x.shape == PhaseV::Triple || x.shape == PhaseV::Semi0 ||
                   x.shape == PhaseV::Full0;
        case PhaseV::Point:
            // arcs and semicircles are hulls of pointwise sums; their
            // endpoints are only attained as limits, so a point sits below
            // them exactly when it lies strictly inside
            switch (x.shape) {
                case PhaseV::Arc: {
                    Rat d = mod1(y.a - x.a);
                    return d.sgn() > 0 && d < x.len;
                }
                case PhaseV::Triple: return y.a == x.a || y.a == antip(x.a);
                case PhaseV::Semi0: {
                    Rat d = mod1(y.a - x.a);
                    return d.sgn() > 0 && d < half();
                }
                case PhaseV::Full0: return true;
                default: return false;
            }
        case PhaseV::Arc:
            switch (x.shape) {
                case PhaseV::Arc: return arc_in_arc(y.a, y.len, x.a, x.len);
                case PhaseV::Semi0: return arc_in_arc(y.a, y.len, x.a, half());
                case PhaseV::Full0: return true;
                default: return false;
            }
        case PhaseV::Triple:
            if (x.shape == PhaseV::Semi0) {
                Rat d = mod1(y.a - x.a);
                return d.is_zero() || d == half();
            }
            return x.shape == PhaseV::Full0;
        case PhaseV::Semi0:
            return x.shape == PhaseV::Full0;
        default:
            return false;
    }
}

} // namespace phase_detail

struct PhaseSys : System {
    // grid > 0 restricts the carrier to angles with denominator dividing
    // grid, which is closed under everything when 12 | grid, and makes the
    // system enumerable for exhaustive checks.
    int grid = 0;

    explicit PhaseSys(int grid_denom = 0) : grid(grid_denom) {
        name = grid ? "phase-grid" + std::to_string(grid) : "phase";
        surpass_kind = SurpassKind::subset;
        enumerable = grid > 0;
    }

    Elem wrap(const PhaseV& v) const { return Elem(id, v); }
    Elem point(const Rat& a) const { return wrap(phase_detail::ppoint(a)); }

    Elem add(const Elem& a, const Elem& b) const override {
        check(a); check(b);
        return wrap(phase_detail::add(a.as<PhaseV>(), b.as<PhaseV>()));
    }
    Elem neg(const Elem& a) const override {
        check(a);
        return wrap(phase_detail::negate(a.as<PhaseV>()));
    }
    Elem mul(const Elem& a, const Elem& b) const override {
        check(a); check(b);
        const auto &x = a.as<PhaseV>(), &y = b.as<PhaseV>();
        if (x.shape == PhaseV::Zero || y.shape == PhaseV::Zero) return zero();
        PhaseV s = phase_detail::pzero();
        for (const Rat& u : phase_detail::decomp(x))
            for (const Rat& v : phase_detail::decomp(y))
                s = phase_detail::add(s, phase_detail::ppoint(u + v));
        return wrap(s);
    }
    bool tangible(const Elem& a) const override {
        return a.as<PhaseV>().shape == PhaseV::Point;
    }
    bool is_zero(const Elem& a) const override {
        return a.as<PhaseV>().shape == PhaseV::Zero;
    }
    Elem zero() const override { return wrap(phase_detail::pzero()); }
    Elem one() const override { return point(Rat(0)); }
    bool surpasses(const Elem& a, const Elem& b) const override {
        return phase_detail::contains(a.as<PhaseV>(), b.as<PhaseV>());
    }
    bool quasi_zero(const Elem& a) const override {
        int s = a.as<PhaseV>().shape;
        return s == PhaseV::Zero || s == PhaseV::Triple || s == PhaseV::Full0;
    }
    int height(const Elem& a, int = 6) const override {
        switch (a.as<PhaseV>().shape) {
            case PhaseV::Zero: return 0;
            case PhaseV::Point: return 1;
            case PhaseV::Arc:
            case PhaseV::Triple: return 2;
            default: return 3;
        }
    }
    std::vector<Elem> carrier() const override {
        if (!grid) return System::carrier();
        std::vector<Elem> out;
        out.push_back(zero());
        auto ang = [&](int i) { return Rat(i, grid); };
        for (int i = 0; i < grid; ++i) out.push_back(point(ang(i)));
        for (int i = 0; i < grid; ++i)
            for (int l = 1; 2 * l < grid; ++l)
                out.push_back(wrap(phase_detail::parc(ang(i), ang(l))));
        for (int i = 0; 2 * i < grid; ++i)
            out.push_back(wrap(phase_detail::ptriple(ang(i))));
        for (int i = 0; i < grid; ++i)
            out.push_back(wrap(phase_detail::psemi(ang(i))));
        out.push_back(wrap(phase_detail::pfull()));
        return out;
    }
    std::string str(const Elem& e) const override {
        const auto& x = e.as<PhaseV>();
        switch (x.shape) {
            case PhaseV::Zero: return "0";
            case PhaseV::Point: return "pt " + x.a.str();
            case PhaseV::Arc: return "arc " + x.a.str() + " " + x.len.str();
            case PhaseV::Triple: return "tri " + x.a.str();
            case PhaseV::Semi0: return "semi " + x.a.str();
            default: return "full";
        }
    }
    Elem parse(const std::string& s) const override {
        std::istringstream in(s);
        std::string kw;
        in >> kw;
        if (kw == "0") return zero();
        if (kw == "full") return wrap(phase_detail::pfull());
        std::string a, l;
        in >> a;
        if (kw == "pt") return point(parse_rat(a));
        if (kw == "tri") return wrap(phase_detail::ptriple(parse_rat(a)));
        if (kw == "semi") return wrap(phase_detail::psemi(parse_rat(a)));
        if (kw == "arc") {
            in >> l;
            return wrap(phase_detail::parc(parse_rat(a), parse_rat(l)));
        }
        throw std::invalid_argument("bad phase literal '" + s + "'");
    }
};

} // namespace tsys
