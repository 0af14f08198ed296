#pragma once

// Canonical element payloads. Every element carries the id of the system it
// lives in; mixing systems in one operation is a hard error, never a coercion.

#include <string>
#include <variant>

#include "rat.hpp"

namespace tsys {

// Finite (table-backed) systems: index into the carrier.
struct FinV {
    int idx = 0;
    friend bool operator==(const FinV&, const FinV&) = default;
};

// Max-plus over the rationals, with -infinity adjoined as the zero.
struct MaxV {
    bool zero = false;
    Rat v;
    friend bool operator==(const MaxV&, const MaxV&) = default;
};

// Supertropical: a tangible and a ghost copy of each magnitude.
struct SupV {
    enum Tag { Zero = 0, Tang = 1, Ghost = 2 };
    int tag = Zero;
    Rat v;
    friend bool operator==(const SupV&, const SupV&) = default;
};

// Layered: (layer, magnitude).  The layer semiring is a parameter of the
// system (naturals or integers mod n); magnitudes are rational (max-plus).
struct LayV {
    bool zero = false;
    long long layer = 0;
    Rat v;
    friend bool operator==(const LayV&, const LayV&) = default;
};

// Exploded layered: (leading coefficient, magnitude); coefficient 0 marks
// the ghost layer.
struct EltV {
    bool zero = false;
    Rat c;
    Rat v;
    friend bool operator==(const EltV&, const EltV&) = default;
};

// Symmetrized max-plus, bipotent version: a positive, a negative and a
// balanced copy of each magnitude.
struct SymV {
    enum Tag { Zero = 0, Pos = 1, Neg = 2, Bal = 3 };
    int tag = Zero;
    Rat v;
    friend bool operator==(const SymV&, const SymV&) = default;
};

// Phase shapes on the unit circle; angles are rational turns in [0,1).
//  Point:  a
//  Arc:    closed arc from a of length len, 0 < len < 1/2
//  Triple: {a, a+1/2} with a canonicalized into [0,1/2)
//  Semi0:  closed semicircle from a, zero included
//  Full0:  whole circle, zero included
struct PhaseV {
    enum Shape { Zero = 0, Point = 1, Arc = 2, Triple = 3, Semi0 = 4, Full0 = 5 };
    int shape = Zero;
    Rat a;
    Rat len;
    friend bool operator==(const PhaseV&, const PhaseV&) = default;
};

// Triangle: closed subintervals [lo, hi] of the nonnegative rationals that
// can appear as the third side of a triangle; [0,0] is the zero.
struct TriV {
    Rat lo, hi;
    friend bool operator==(const TriV&, const TriV&) = default;
};

using Payload = std::variant<FinV, MaxV, SupV, LayV, EltV, SymV, PhaseV, TriV>;

struct Elem {
    int sys = -1;
    Payload p;

    Elem() = default;
    Elem(int s, Payload pl) : sys(s), p(std::move(pl)) {}

    friend bool operator==(const Elem& x, const Elem& y) {
        return x.sys == y.sys && x.p == y.p;
    }

    template <class T> const T& as() const { return std::get<T>(p); }
    template <class T> bool is() const { return std::holds_alternative<T>(p); }
};

} // namespace tsys
