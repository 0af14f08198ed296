#pragma once

// The abstract interface every system (triple with a negation map) exposes,
// plus the global registry used to dispatch elements back to their system.

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "element.hpp"

namespace tsys {

enum class SurpassKind { circ, subset, equality };

inline const char* surpass_kind_name(SurpassKind k) {
    switch (k) {
        case SurpassKind::circ: return "circ";
        case SurpassKind::subset: return "subset";
        default: return "equality";
    }
}

struct System {
    int id = -1;
    std::string name;
    bool has_zero = true;
    bool has_one = true;
    bool has_mul = true;
    bool enumerable = false;
    bool pseudo = false; // tangibles meet quasi-zeros; tolerated only if flagged
    SurpassKind surpass_kind = SurpassKind::circ;

    virtual ~System() = default;

    virtual Elem add(const Elem& a, const Elem& b) const = 0;
    virtual Elem neg(const Elem& a) const = 0;
    virtual Elem mul(const Elem&, const Elem&) const {
        throw std::logic_error(name + ": no multiplication");
    }
    virtual bool tangible(const Elem& a) const = 0;
    virtual bool is_zero(const Elem& a) const { return has_zero && a == zero(); }
    virtual Elem zero() const { throw std::logic_error(name + ": no zero element"); }
    virtual Elem one() const { throw std::logic_error(name + ": no unit element"); }

    // b ⪯ a in the system's surpassing relation (circ / subset / equality).
    virtual bool surpasses(const Elem& a, const Elem& b) const = 0;

    virtual std::vector<Elem> carrier() const {
        throw std::logic_error(name + ": carrier is not enumerable");
    }

    virtual std::string str(const Elem& a) const = 0;
    virtual Elem parse(const std::string&) const {
        throw std::logic_error(name + ": no element literal parser");
    }

    // a° = a + (-)a
    Elem quasi(const Elem& a) const { return add(a, neg(a)); }

    // a ∈ A°?  Enumerable systems search the carrier; parametric systems
    // override with a closed form.
    virtual bool quasi_zero(const Elem& a) const {
        for (const Elem& c : carrier())
            if (quasi(c) == a) return true;
        return false;
    }

    // Minimal number of tangible summands; 0 for the zero, -1 if the bound
    // is exceeded ("height >= bound+1").
    virtual int height(const Elem& a, int bound = 6) const;

    void check(const Elem& a) const {
        if (a.sys != id)
            throw std::invalid_argument("element of system #" + std::to_string(a.sys) +
                                        " used in '" + name + "'");
    }
};

inline std::vector<std::shared_ptr<System>>& registry() {
    static std::vector<std::shared_ptr<System>> r;
    return r;
}

inline System& sys_of(const Elem& e) {
    auto& r = registry();
    if (e.sys < 0 || e.sys >= (int)r.size())
        throw std::invalid_argument("element belongs to no registered system");
    return *r[e.sys];
}

template <class T, class... Args>
T& make_system(Args&&... args) {
    auto p = std::make_shared<T>(std::forward<Args>(args)...);
    p->id = (int)registry().size();
    registry().push_back(p);
    return *p;
}

inline System* find_system(const std::string& name) {
    for (auto& p : registry())
        if (p->name == name) return p.get();
    return nullptr;
}

// Generic height via breadth-first search over sums of tangibles.
inline int System::height(const Elem& a, int bound) const {
    if (has_zero && is_zero(a)) return 0;
    if (!enumerable)
        throw std::logic_error(name + ": height needs an enumerable carrier");
    std::vector<Elem> tang;
    for (const Elem& c : carrier())
        if (tangible(c)) tang.push_back(c);
    std::vector<Elem> layer = tang, seen = tang;
    auto known = [&](const Elem& x) {
        for (const Elem& s : seen)
            if (s == x) return true;
        return false;
    };
    for (int t = 1; t <= bound; ++t) {
        for (const Elem& x : layer)
            if (x == a) return t;
        std::vector<Elem> next;
        for (const Elem& x : layer)
            for (const Elem& g : tang) {
                Elem y = add(x, g);
                if (!known(y)) { seen.push_back(y); next.push_back(y); }
            }
        layer = std::move(next);
        if (layer.empty()) break;
    }
    return -1;
}

} // namespace tsys
