#pragma once

// Symbolic polynomials with formal negation: each monomial carries a pair
// (m, n) of natural-number multiplicities read as "m copies minus n copies".
// Used to certify determinant identities once and for all, independent of
// the target carrier.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <stdexcept>

namespace tsys {

using Mono = std::vector<uint8_t>; // exponent per variable

struct sym_overflow : std::overflow_error {
    sym_overflow() : std::overflow_error("symbolic multiplicity overflow") {}
};

inline uint64_t checked_add(uint64_t a, uint64_t b) {
    uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw sym_overflow{};
    return r;
}
inline uint64_t checked_mul(uint64_t a, uint64_t b) {
    uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw sym_overflow{};
    return r;
}

struct SymPoly {
    int nvars = 0;
    std::map<Mono, std::pair<uint64_t, uint64_t>> terms;

    SymPoly() = default;
    explicit SymPoly(int nv) : nvars(nv) {}

    static SymPoly variable(int nv, int i) {
        SymPoly p(nv);
        Mono m(nv, 0);
        m[i] = 1;
        p.terms[m] = {1, 0};
        return p;
    }

    void add_term(const Mono& m, uint64_t pos, uint64_t neg) {
        auto& [p, n] = terms[m];
        p = checked_add(p, pos);
        n = checked_add(n, neg);
        if (p == 0 && n == 0) terms.erase(m);
    }
};

inline SymPoly sym_add(const SymPoly& a, const SymPoly& b) {
    SymPoly r = a;
    for (const auto& [m, pn] : b.terms) r.add_term(m, pn.first, pn.second);
    return r;
}

inline SymPoly sym_neg(const SymPoly& a) {
    SymPoly r(a.nvars);
    for (const auto& [m, pn] : a.terms) r.terms[m] = {pn.second, pn.first};
    return r;
}

inline SymPoly sym_mul(const SymPoly& a, const SymPoly& b) {
    SymPoly r(a.nvars);
    for (const auto& [ma, pa] : a.terms)
        for (const auto& [mb, pb] : b.terms) {
            Mono m(a.nvars);
            for (int i = 0; i < a.nvars; ++i) {
                int e = ma[i] + mb[i];
                if (e > 255) throw sym_overflow{};
                m[i] = (uint8_t)e;
            }
            r.add_term(m, checked_add(checked_mul(pa.first, pb.first),
                                      checked_mul(pa.second, pb.second)),
                       checked_add(checked_mul(pa.first, pb.second),
                                   checked_mul(pa.second, pb.first)));
        }
    return r;
}

// Collapse to integer coefficients m - n.
inline std::map<Mono, long long> classicalize(const SymPoly& a) {
    std::map<Mono, long long> r;
    for (const auto& [m, pn] : a.terms) {
        if (pn.first > (uint64_t)INT64_MAX || pn.second > (uint64_t)INT64_MAX)
            throw sym_overflow{};
        long long v = (long long)pn.first - (long long)pn.second;
        if (v != 0) r[m] = v;
    }
    return r;
}

inline std::string mono_str(const Mono& m, const std::vector<std::string>& vnames) {
    std::string s;
    for (size_t i = 0; i < m.size(); ++i) {
        if (!m[i]) continue;
        if (!s.empty()) s += "*";
        s += vnames[i];
        if (m[i] > 1) s += "^" + std::to_string((int)m[i]);
    }
    return s.empty() ? "1" : s;
}

struct TransferLine {
    Mono mono;
    std::pair<uint64_t, uint64_t> p, q;
    uint64_t k = 0;
};

struct TransferCertificate {
    bool ok = false;
    std::string refusal;
    std::vector<TransferLine> lines;
};

// P surpasses Q whenever they agree classically and every monomial of P is
// the matching monomial of Q plus (k, k) for some k >= 0.
inline TransferCertificate transfer_check(const SymPoly& P, const SymPoly& Q,
                                          const std::vector<std::string>& vnames) {
    TransferCertificate cert;
    std::map<Mono, std::pair<uint64_t, uint64_t>> all;
    for (const auto& [m, pn] : P.terms) all[m] = {0, 0};
    for (const auto& [m, pn] : Q.terms) all[m] = {0, 0};
    for (auto& [m, dummy] : all) {
        auto ip = P.terms.find(m);
        auto iq = Q.terms.find(m);
        std::pair<uint64_t, uint64_t> p = ip == P.terms.end() ? std::pair<uint64_t, uint64_t>{0, 0} : ip->second;
        std::pair<uint64_t, uint64_t> q = iq == Q.terms.end() ? std::pair<uint64_t, uint64_t>{0, 0} : iq->second;
        if (p.first < q.first || p.second < q.second ||
            p.first - q.first != p.second - q.second) {
            cert.refusal = "monomial " + mono_str(m, vnames) + ": (" +
                           std::to_string(p.first) + "," + std::to_string(p.second) +
                           ") is not (" + std::to_string(q.first) + "," +
                           std::to_string(q.second) + ") plus (k,k)";
            cert.lines.clear();
            return cert;
        }
        cert.lines.push_back({m, p, q, p.first - q.first});
    }
    cert.ok = true;
    return cert;
}

// Independent re-check of an issued certificate against the two polynomials.
inline bool verify_certificate(const SymPoly& P, const SymPoly& Q,
                               const TransferCertificate& cert) {
    if (!cert.ok) return false;
    std::map<Mono, const TransferLine*> by_mono;
    for (const auto& l : cert.lines) {
        if (by_mono.count(l.mono)) return false;
        by_mono[l.mono] = &l;
    }
    auto covered = [&](const SymPoly& X) {
        for (const auto& [m, pn] : X.terms)
            if (!by_mono.count(m)) return false;
        return true;
    };
    if (!covered(P) || !covered(Q)) return false;
    for (const auto& l : cert.lines) {
        auto ip = P.terms.find(l.mono);
        auto iq = Q.terms.find(l.mono);
        std::pair<uint64_t, uint64_t> p = ip == P.terms.end() ? std::pair<uint64_t, uint64_t>{0, 0} : ip->second;
        std::pair<uint64_t, uint64_t> q = iq == Q.terms.end() ? std::pair<uint64_t, uint64_t>{0, 0} : iq->second;
        if (p != l.p || q != l.q) return false;
        if (p.first != checked_add(q.first, l.k)) return false;
        if (p.second != checked_add(q.second, l.k)) return false;
    }
    return true;
}

// ---- symbolic matrices -----------------------------------------------

struct SymMatrix {
    int n = 0;
    int nvars = 0;
    std::vector<SymPoly> e;

    SymMatrix(int n_, int nvars_) : n(n_), nvars(nvars_), e(n_ * n_, SymPoly(nvars_)) {}
    SymPoly& at(int i, int j) { return e[i * n + j]; }
    const SymPoly& at(int i, int j) const { return e[i * n + j]; }
};

inline SymMatrix sym_variables(int n, int nvars, int base) {
    SymMatrix m(n, nvars);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.at(i, j) = SymPoly::variable(nvars, base + i * n + j);
    return m;
}

inline SymMatrix sym_mat_mul(const SymMatrix& a, const SymMatrix& b) {
    SymMatrix r(a.n, a.nvars);
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) {
            SymPoly s(a.nvars);
            for (int k = 0; k < a.n; ++k)
                s = sym_add(s, sym_mul(a.at(i, k), b.at(k, j)));
            r.at(i, j) = s;
        }
    return r;
}

inline SymMatrix sym_minor(const SymMatrix& a, int di, int dj) {
    SymMatrix r(a.n - 1, a.nvars);
    for (int i = 0, ri = 0; i < a.n; ++i) {
        if (i == di) continue;
        for (int j = 0, rj = 0; j < a.n; ++j) {
            if (j == dj) continue;
            r.at(ri, rj++) = a.at(i, j);
        }
        ++ri;
    }
    return r;
}

inline SymPoly sym_det(const SymMatrix& a) {
    std::vector<int> perm(a.n);
    for (int i = 0; i < a.n; ++i) perm[i] = i;
    SymPoly d(a.nvars);
    if (a.n == 0) return d;
    do {
        int inv = 0;
        for (int i = 0; i < a.n; ++i)
            for (int j = i + 1; j < a.n; ++j)
                if (perm[i] > perm[j]) ++inv;
        SymPoly t = a.at(0, perm[0]);
        for (int i = 1; i < a.n; ++i) t = sym_mul(t, a.at(i, perm[i]));
        d = sym_add(d, inv % 2 ? sym_neg(t) : t);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return d;
}

inline SymMatrix sym_adjoint(const SymMatrix& a) {
    SymMatrix r(a.n, a.nvars);
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) {
            SymPoly d = sym_det(sym_minor(a, j, i));
            r.at(i, j) = (i + j) % 2 ? sym_neg(d) : d;
        }
    return r;
}

struct SymIdentityReport {
    bool ok = true;
    std::string detail;
    std::vector<std::pair<std::string, TransferCertificate>> certificates;
};

inline std::vector<std::string> det_var_names(int n, bool two_matrices) {
    std::vector<std::string> v;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            v.push_back("a" + std::to_string(i + 1) + std::to_string(j + 1));
    if (two_matrices)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                v.push_back("b" + std::to_string(i + 1) + std::to_string(j + 1));
    return v;
}

// which: "det_mult" (|AB| surpasses |A||B|), "adj_mult"
// (adj(AB) surpasses adj(B)adj(A), entrywise), "laplace_adj"
// (diagonal of A adj(A) surpasses |A|, off-diagonal surpasses 0).
inline SymIdentityReport symbolic_det_identity(int n, const std::string& which) {
    if (n < 2 || n > 4) throw std::invalid_argument("symbolic identities support n in [2,4]");
    SymIdentityReport rep;
    auto record = [&](const std::string& label, const SymPoly& P, const SymPoly& Q,
                      const std::vector<std::string>& vn) {
        TransferCertificate c = transfer_check(P, Q, vn);
        if (!c.ok || !verify_certificate(P, Q, c)) {
            rep.ok = false;
            rep.detail += label + ": " + (c.refusal.empty() ? "re-verification failed" : c.refusal) + "\n";
        }
        rep.certificates.emplace_back(label, std::move(c));
    };
    if (which == "det_mult") {
        auto vn = det_var_names(n, true);
        SymMatrix A = sym_variables(n, 2 * n * n, 0);
        SymMatrix B = sym_variables(n, 2 * n * n, n * n);
        record("det(AB) >= det(A)det(B)", sym_det(sym_mat_mul(A, B)),
               sym_mul(sym_det(A), sym_det(B)), vn);
    } else if (which == "adj_mult") {
        auto vn = det_var_names(n, true);
        SymMatrix A = sym_variables(n, 2 * n * n, 0);
        SymMatrix B = sym_variables(n, 2 * n * n, n * n);
        SymMatrix P = sym_adjoint(sym_mat_mul(A, B));
        SymMatrix Q = sym_mat_mul(sym_adjoint(B), sym_adjoint(A));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                record("adj(AB)[" + std::to_string(i) + "," + std::to_string(j) +
                           "] >= (adj(B)adj(A))[..]",
                       P.at(i, j), Q.at(i, j), vn);
    } else if (which == "laplace_adj") {
        auto vn = det_var_names(n, false);
        SymMatrix A = sym_variables(n, n * n, 0);
        SymMatrix P = sym_mat_mul(A, sym_adjoint(A));
        SymPoly d = sym_det(A);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                record("(A adj(A))[" + std::to_string(i) + "," + std::to_string(j) +
                           (i == j ? "] >= det(A)" : "] >= 0"),
                       P.at(i, j), i == j ? d : SymPoly(n * n), vn);
    } else {
        throw std::invalid_argument("unknown identity '" + which + "'");
    }
    return rep;
}

} // namespace tsys
