#pragma once

// Matrices over a system: determinant with a negation map (permutation
// expansion, n <= 8), adjoint, singularity classes, dependence search,
// ranks and the two standard involutions.

#include <algorithm>
#include <functional>
#include <optional>

#include "system.hpp"

namespace tsys {

struct Matrix {
    const System* S = nullptr;
    int rows = 0, cols = 0;
    std::vector<Elem> e;

    Matrix() = default;
    Matrix(const System& sys, int r, int c)
        : S(&sys), rows(r), cols(c), e((size_t)r * c, sys.has_zero ? sys.zero() : Elem{}) {}

    Elem& at(int i, int j) { return e[(size_t)i * cols + j]; }
    const Elem& at(int i, int j) const { return e[(size_t)i * cols + j]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows == b.rows && a.cols == b.cols && a.e == b.e;
    }
};

inline Matrix mat_add(const Matrix& a, const Matrix& b) {
    if (a.rows != b.rows || a.cols != b.cols || a.S != b.S)
        throw std::invalid_argument("matrix shape/system mismatch");
    Matrix r(*a.S, a.rows, a.cols);
    for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.S->add(a.e[i], b.e[i]);
    return r;
}

inline Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows || a.S != b.S)
        throw std::invalid_argument("matrix shape/system mismatch");
    Matrix r(*a.S, a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < b.cols; ++j) {
            Elem s = a.S->mul(a.at(i, 0), b.at(0, j));
            for (int k = 1; k < a.cols; ++k)
                s = a.S->add(s, a.S->mul(a.at(i, k), b.at(k, j)));
            r.at(i, j) = s;
        }
    return r;
}

inline Matrix mat_neg(const Matrix& a) {
    Matrix r = a;
    for (auto& x : r.e) x = a.S->neg(x);
    return r;
}

inline Matrix transpose(const Matrix& a) {
    Matrix r(*a.S, a.cols, a.rows);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) r.at(j, i) = a.at(i, j);
    return r;
}

// [[A11,A12],[A21,A22]] -> [[A22^t, (-)A12^t],[(-)A21^t, A11^t]]
inline Matrix symplectic(const Matrix& a) {
    if (a.rows != a.cols || a.rows % 2 != 0)
        throw std::invalid_argument("symplectic involution needs even square dimension");
    int h = a.rows / 2;
    Matrix r(*a.S, a.rows, a.cols);
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j) {
            r.at(i, j) = a.at(h + j, h + i);
            r.at(i, h + j) = a.S->neg(a.at(j, h + i));
            r.at(h + i, j) = a.S->neg(a.at(h + j, i));
            r.at(h + i, h + j) = a.at(j, i);
        }
    return r;
}

// determinant and its even/odd permutation parts
inline void det_parts(const Matrix& a, Elem& even, Elem& odd, bool& even_set, bool& odd_set) {
    if (a.rows != a.cols) throw std::invalid_argument("determinant of a non-square matrix");
    if (a.rows > 8) throw std::invalid_argument("determinant capped at n = 8");
    const System& S = *a.S;
    even_set = odd_set = false;
    int n = a.rows;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        Elem t = n ? a.at(0, perm[0]) : S.one();
        for (int i = 1; i < n; ++i) t = S.mul(t, a.at(i, perm[i]));
        if (inv % 2 == 0) {
            even = even_set ? S.add(even, t) : t;
            even_set = true;
        } else {
            odd = odd_set ? S.add(odd, t) : t;
            odd_set = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

inline Elem det(const Matrix& a) {
    const System& S = *a.S;
    if (a.rows == 0) return S.one();
    Elem even, odd;
    bool es, os;
    det_parts(a, even, odd, es, os);
    if (!os) return even;
    return S.add(even, S.neg(odd));
}

inline std::pair<Elem, Elem> det_parts(const Matrix& a) {
    const System& S = *a.S;
    Elem even = S.has_zero ? S.zero() : Elem{};
    Elem odd = S.has_zero ? S.zero() : Elem{};
    bool es, os;
    Elem e2, o2;
    det_parts(a, e2, o2, es, os);
    if (es) even = e2;
    if (os) odd = o2;
    return {even, odd};
}

inline Matrix minor_of(const Matrix& a, int di, int dj) {
    Matrix r(*a.S, a.rows - 1, a.cols - 1);
    for (int i = 0, ri = 0; i < a.rows; ++i) {
        if (i == di) continue;
        for (int j = 0, rj = 0; j < a.cols; ++j) {
            if (j == dj) continue;
            r.at(ri, rj++) = a.at(i, j);
        }
        ++ri;
    }
    return r;
}

inline Matrix adjoint(const Matrix& a) {
    if (a.rows != a.cols) throw std::invalid_argument("adjoint of a non-square matrix");
    const System& S = *a.S;
    Matrix r(S, a.rows, a.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) {
            Elem d = det(minor_of(a, j, i));
            r.at(i, j) = ((i + j) % 2 == 0) ? d : S.neg(d);
        }
    return r;
}

enum class SingClass { nonsingular, circ_singular, singular_only, tangibly_indeterminate };

inline const char* sing_name(SingClass c) {
    switch (c) {
        case SingClass::nonsingular: return "nonsingular";
        case SingClass::circ_singular: return "circ_singular";
        case SingClass::singular_only: return "singular_only";
        default: return "tangibly_indeterminate";
    }
}

inline SingClass singularity_class(const Matrix& a) {
    const System& S = *a.S;
    Elem d = det(a);
    if (S.tangible(d)) return SingClass::nonsingular;
    if (S.quasi_zero(d)) return SingClass::circ_singular;
    if (S.has_zero && S.surpasses(d, S.zero())) return SingClass::singular_only;
    return SingClass::tangibly_indeterminate;
}

struct DependenceWitness {
    std::vector<int> which;       // indices of the rows used
    std::vector<Elem> coefficients;
    std::vector<Elem> combination;
};

// Search tangible combinations of nonempty row subsets over the pool.
inline std::optional<DependenceWitness>
circ_dependent(const System& S, const std::vector<std::vector<Elem>>& rows,
               const std::vector<Elem>& pool) {
    if (pool.empty()) throw std::invalid_argument("circ_dependent: empty pool");
    int k = (int)rows.size();
    if (k == 0 || k > 20) throw std::invalid_argument("circ_dependent: bad row count");
    size_t m = rows[0].size();
    for (int mask = 1; mask < (1 << k); ++mask) {
        std::vector<int> which;
        for (int i = 0; i < k; ++i)
            if (mask >> i & 1) which.push_back(i);
        std::vector<size_t> pick(which.size(), 0);
        while (true) {
            std::vector<Elem> comb(m);
            for (size_t c = 0; c < m; ++c) {
                Elem s = S.mul(pool[pick[0]], rows[which[0]][c]);
                for (size_t r = 1; r < which.size(); ++r)
                    s = S.add(s, S.mul(pool[pick[r]], rows[which[r]][c]));
                comb[c] = s;
            }
            bool allq = true;
            for (const Elem& x : comb)
                if (!S.quasi_zero(x)) { allq = false; break; }
            if (allq) {
                DependenceWitness w;
                w.which = which;
                for (size_t r = 0; r < which.size(); ++r)
                    w.coefficients.push_back(pool[pick[r]]);
                w.combination = comb;
                return w;
            }
            size_t r = 0;
            while (r < pick.size() && ++pick[r] == pool.size()) pick[r++] = 0;
            if (r == pick.size()) break;
        }
    }
    return std::nullopt;
}

// Default coefficient pool: tangible entries closed under quotients to depth
// 2 (parametric systems), or the full tangible carrier (finite systems).
inline std::vector<Elem> default_pool(const System& S, const Matrix& a, size_t cap = 512,
                                      bool* complete = nullptr) {
    std::vector<Elem> pool;
    auto push = [&](const Elem& x) {
        if (!S.tangible(x)) return;
        for (const Elem& p : pool)
            if (p == x) return;
        if (pool.size() < cap) pool.push_back(x);
    };
    if (S.enumerable) {
        for (const Elem& c : S.carrier()) push(c);
        if (complete) *complete = true;
        return pool;
    }
    for (const Elem& x : a.e) push(x);
    if (S.has_one) push(S.one());
    std::vector<Elem> base = pool;
    for (int depth = 0; depth < 2; ++depth) {
        std::vector<Elem> cur = pool;
        for (const Elem& x : cur)
            for (const Elem& y : base) {
                // quotient x/y for the parametric magnitude systems
                if (x.is<SupV>()) {
                    push(Elem(x.sys, SupV{SupV::Tang, x.as<SupV>().v - y.as<SupV>().v}));
                } else if (x.is<MaxV>()) {
                    push(Elem(x.sys, MaxV{false, x.as<MaxV>().v - y.as<MaxV>().v}));
                } else {
                    if (complete) *complete = false;
                    return pool;
                }
            }
    }
    if (complete) *complete = false;
    return pool;
}

inline std::vector<std::vector<Elem>> mat_rows(const Matrix& a) {
    std::vector<std::vector<Elem>> rows(a.rows);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) rows[i].push_back(a.at(i, j));
    return rows;
}

inline int row_rank(const Matrix& a, const std::vector<Elem>& pool) {
    auto rows = mat_rows(a);
    int best = 0;
    for (int mask = 1; mask < (1 << a.rows); ++mask) {
        std::vector<std::vector<Elem>> sub;
        for (int i = 0; i < a.rows; ++i)
            if (mask >> i & 1) sub.push_back(rows[i]);
        if ((int)sub.size() <= best) continue;
        if (!circ_dependent(*a.S, sub, pool)) best = (int)sub.size();
    }
    return best;
}

inline int column_rank(const Matrix& a, const std::vector<Elem>& pool) {
    return row_rank(transpose(a), pool);
}

inline int submatrix_rank(const Matrix& a) {
    int n = std::min(a.rows, a.cols), best = 0;
    for (int k = 1; k <= n; ++k) {
        bool found = false;
        std::vector<int> ri(k), ci(k);
        std::function<void(int, int)> pick_rows = [&](int pos, int from) {
            if (found) return;
            if (pos == k) {
                std::function<void(int, int)> pick_cols = [&](int cpos, int cfrom) {
                    if (found) return;
                    if (cpos == k) {
                        Matrix sub(*a.S, k, k);
                        for (int i = 0; i < k; ++i)
                            for (int j = 0; j < k; ++j) sub.at(i, j) = a.at(ri[i], ci[j]);
                        if (a.S->tangible(det(sub))) found = true;
                        return;
                    }
                    for (int c = cfrom; c < a.cols; ++c) { ci[cpos] = c; pick_cols(cpos + 1, c + 1); }
                };
                pick_cols(0, 0);
                return;
            }
            for (int r = from; r < a.rows; ++r) { ri[pos] = r; pick_rows(pos + 1, r + 1); }
        };
        pick_rows(0, 0);
        if (found) best = k;
    }
    return best;
}

struct DetTheoremReport {
    bool det_mult = true;      // |A||B| surpassed by |AB|
    bool adj_identity = true;  // |A|I surpassed by A adj(A), entrywise
    bool adj_mult = true;      // adj(B)adj(A) surpassed by adj(AB), entrywise
    bool equality_when_tangible = true; // |A||B| = |AB| when |AB| tangible
    std::string detail;
};

inline DetTheoremReport check_det_theorems(const Matrix& A, const Matrix& B) {
    const System& S = *A.S;
    DetTheoremReport r;
    Matrix AB = mat_mul(A, B);
    Elem dA = det(A), dB = det(B), dAB = det(AB);
    Elem prod = S.mul(dA, dB);
    if (!S.surpasses(dAB, prod)) {
        r.det_mult = false;
        r.detail = "|A||B| = " + S.str(prod) + " not surpassed by |AB| = " + S.str(dAB);
    }
    if (S.tangible(dAB) && !(prod == dAB)) {
        r.equality_when_tangible = false;
        r.detail += "; tangible |AB| without equality";
    }
    Matrix AdjA = adjoint(A);
    Matrix AAdj = mat_mul(A, AdjA);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) {
            Elem want = (i == j) ? dA : S.zero();
            if (!S.surpasses(AAdj.at(i, j), want)) {
                r.adj_identity = false;
                r.detail += "; |A|I vs A adj(A) fails at (" + std::to_string(i) + "," +
                            std::to_string(j) + ")";
            }
        }
    Matrix lhs = mat_mul(adjoint(B), AdjA);
    Matrix rhs = adjoint(AB);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j)
            if (!S.surpasses(rhs.at(i, j), lhs.at(i, j))) {
                r.adj_mult = false;
                r.detail += "; adj(B)adj(A) vs adj(AB) fails at (" + std::to_string(i) + "," +
                            std::to_string(j) + ")";
            }
    return r;
}

} // namespace tsys
