#pragma once

// Exact rational arithmetic on 64-bit numerator/denominator.
// All intermediate products go through __int128; anything that would not
// fit back into long long throws rat_overflow instead of wrapping.

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tsys {

struct rat_overflow : std::overflow_error {
    rat_overflow() : std::overflow_error("rational overflow") {}
};

namespace detail {
inline long long narrow(__int128 v) {
    if (v > __int128(INT64_MAX) || v < __int128(INT64_MIN)) throw rat_overflow{};
    return static_cast<long long>(v);
}
inline __int128 iabs(__int128 v) { return v < 0 ? -v : v; }
inline __int128 igcd(__int128 a, __int128 b) {
    a = iabs(a); b = iabs(b);
    while (b != 0) { __int128 t = a % b; a = b; b = t; }
    return a;
}
} // namespace detail

struct Rat {
    long long num = 0;
    long long den = 1; // always > 0, gcd(num, den) == 1

    constexpr Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d) { assign(n, d); }

    void assign(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 g = detail::igcd(n, d);
        if (g > 1) { n /= g; d /= g; }
        num = detail::narrow(n);
        den = detail::narrow(d);
    }

    bool is_zero() const { return num == 0; }
    int sgn() const { return num > 0 ? 1 : num < 0 ? -1 : 0; }

    friend Rat operator+(const Rat& a, const Rat& b) {
        Rat r;
        r.assign(__int128(a.num) * b.den + __int128(b.num) * a.den,
                 __int128(a.den) * b.den);
        return r;
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        Rat r;
        r.assign(__int128(a.num) * b.den - __int128(b.num) * a.den,
                 __int128(a.den) * b.den);
        return r;
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        Rat r;
        r.assign(__int128(a.num) * b.num, __int128(a.den) * b.den);
        return r;
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw std::domain_error("division by zero rational");
        Rat r;
        r.assign(__int128(a.num) * b.den, __int128(a.den) * b.num);
        return r;
    }
    Rat operator-() const {
        Rat r;
        r.num = -num; r.den = den;
        return r;
    }
    Rat& operator+=(const Rat& o) { *this = *this + o; return *this; }
    Rat& operator-=(const Rat& o) { *this = *this - o; return *this; }
    Rat& operator*=(const Rat& o) { *this = *this * o; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        __int128 l = __int128(a.num) * b.den;
        __int128 r = __int128(b.num) * a.den;
        return l < r ? std::strong_ordering::less
             : l > r ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

inline Rat abs(const Rat& a) { return a.num < 0 ? -a : a; }
inline Rat min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

// Fractional part into [0, 1); used for angles measured in turns.
inline Rat mod1(const Rat& a) {
    long long q = a.num / a.den;
    Rat r;
    r.assign(__int128(a.num) - __int128(q) * a.den, a.den);
    if (r.num < 0) r = r + Rat(1);
    return r;
}

// Parse "n" or "n/d" (optionally signed, surrounding blanks ignored); throws
// on anything else.
inline Rat parse_rat(const std::string& raw) {
    std::size_t b = raw.find_first_not_of(" \t");
    std::size_t e = raw.find_last_not_of(" \t");
    std::string s = b == std::string::npos ? std::string() : raw.substr(b, e - b + 1);
    std::size_t pos = 0;
    long long n = 0, d = 1;
    try {
        n = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal '" + s + "'");
    }
    if (pos < s.size()) {
        if (s[pos] != '/')
            throw std::invalid_argument("bad rational literal '" + s + "'");
        std::size_t pos2 = 0;
        std::string rest = s.substr(pos + 1);
        try {
            d = std::stoll(rest, &pos2);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad rational literal '" + s + "'");
        }
        if (pos2 != rest.size())
            throw std::invalid_argument("bad rational literal '" + s + "'");
    }
    return Rat(n, d);
}

} // namespace tsys
