#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace conecalc {

/// Exact rational scalar. All geometry in this library is exact; doubles
/// appear only in Monte Carlo estimators and SVG rendering.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p/q" or "p" (optional sign, arbitrary precision).
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    r.canonicalize();
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline int sign(const Rat& r) { return sgn(r); }

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;  // row major

inline QVec qvec(std::initializer_list<long> xs) {
    QVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

inline bool is_zero(const QVec& v) {
    for (const Rat& x : v)
        if (x != 0) return false;
    return true;
}

inline QVec add(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline QVec sub(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline QVec scale(const Rat& c, const QVec& a) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline QVec neg(const QVec& a) { return scale(Rat(-1), a); }

/// Plain coordinate dot product (inner products with a Gram matrix live in Space).
inline Rat dot_std(const QVec& a, const QVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline QVec mat_vec(const QMat& m, const QVec& v) {
    QVec r(m.size(), Rat(0));
    for (size_t i = 0; i < m.size(); ++i) r[i] = dot_std(m[i], v);
    return r;
}

inline QMat mat_mul(const QMat& a, const QMat& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    QMat r(n, QVec(m, Rat(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < k; ++j)
            if (a[i][j] != 0)
                for (size_t l = 0; l < m; ++l) r[i][l] += a[i][j] * b[j][l];
    return r;
}

inline QMat transpose(const QMat& m) {
    if (m.empty()) return {};
    QMat r(m[0].size(), QVec(m.size(), Rat(0)));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j) r[j][i] = m[i][j];
    return r;
}

inline QMat identity_mat(size_t n) {
    QMat m(n, QVec(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

/// Clears denominators and divides by the content, preserving direction.
/// Zero vectors pass through unchanged.
inline QVec primitive(const QVec& v) {
    mpz_class l = 1;
    for (const Rat& x : v) l = lcm(l, x.get_den());
    mpz_class g = 0;
    std::vector<mpz_class> num(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        num[i] = v[i].get_num() * (l / v[i].get_den());
        g = gcd(g, num[i]);
    }
    if (g == 0) return QVec(v.size(), Rat(0));
    QVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(num[i] / g);
    return r;
}

/// primitive() plus a sign flip making the first nonzero entry positive
/// (canonical form for direction-free vectors: equality normals, lineality).
inline QVec primitive_signed(const QVec& v) {
    QVec r = primitive(v);
    for (const Rat& x : r) {
        if (x > 0) return r;
        if (x < 0) return neg(r);
    }
    return r;
}

inline bool lex_less(const QVec& a, const QVec& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

struct QVecLess {
    bool operator()(const QVec& a, const QVec& b) const { return lex_less(a, b); }
};

/// Row-reduces in place, returning pivot columns. Rows end up as the
/// canonical RREF basis of the row space (primitive, leading entry positive).
inline std::vector<size_t> rref(QMat& m) {
    std::vector<size_t> pivots;
    size_t rows = m.size();
    if (rows == 0) return pivots;
    size_t cols = m[0].size(), r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        Rat inv = 1 / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    return pivots;
}

inline size_t rank(QMat m) { return rref(m).size(); }

/// Canonical basis (RREF rows) of the row space of m.
inline QMat row_space_basis(QMat m) {
    rref(m);
    return m;
}

/// Basis of {x : m x = 0}.
inline QMat nullspace(QMat m) {
    if (m.empty()) return {};
    size_t cols = m[0].size();
    std::vector<size_t> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    QMat basis;
    for (size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        QVec v(cols, Rat(0));
        v[c] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][c];
        basis.push_back(v);
    }
    return basis;
}

/// Solves the square system a x = b; throws if singular.
inline QVec solve(QMat a, QVec b) {
    size_t n = a.size();
    for (size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
    std::vector<size_t> pivots = rref(a);
    if (pivots.size() != n || (n > 0 && pivots.back() == n))
        throw std::runtime_error("singular linear system");
    QVec x(n, Rat(0));
    for (size_t i = 0; i < n; ++i) x[pivots[i]] = a[i][n];
    return x;
}

inline Rat det(QMat a) {
    size_t n = a.size();
    Rat d = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return Rat(0);
        if (p != c) {
            std::swap(a[p], a[c]);
            d = -d;
        }
        d *= a[c][c];
        Rat inv = 1 / a[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            if (a[i][c] == 0) continue;
            Rat f = a[i][c] * inv;
            for (size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return d;
}

inline std::string vec_str(const QVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += rat_str(v[i]);
    }
    return s + ")";
}

}  // namespace conecalc
