#ifndef GREX_KCLASS_HPP
#define GREX_KCLASS_HPP

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

#include "grex/homcalc.hpp"

namespace grex {

// Element of the equivariant K-ring: finite integer combination of
// irreducible (uWeight, qWeight) pairs, no zero coefficients stored.
using EqKClass = std::map<std::pair<Diagram, Diagram>, long long>;

inline void addTerm(EqKClass& a, const std::pair<Diagram, Diagram>& key, long long c) {
    if (c == 0) return;
    auto it = a.find(key);
    if (it == a.end()) {
        a.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) a.erase(it);
    }
}

inline EqKClass addClass(const EqKClass& a, const EqKClass& b) {
    EqKClass out = a;
    for (auto& [k, c] : b) addTerm(out, k, c);
    return out;
}

inline EqKClass scaleClass(const EqKClass& a, long long s) {
    EqKClass out;
    for (auto& [k, c] : a) addTerm(out, k, c * s);
    return out;
}

inline EqKClass classOf(const GrContext& ctx, const TwistedIrred& A) {
    TwistedIrred a = normalizeTwist(ctx, A);
    return EqKClass{{{a.uWeight, a.qWeight}, 1}};
}

inline EqKClass mulClass(const GrContext& ctx, const EqKClass& a, const EqKClass& b) {
    EqKClass out;
    for (auto& [ka, ca] : a)
        for (auto& [kb, cb] : b) {
            WeightSum u = tensorDecompose(GLWeight(ka.first, ctx.k), GLWeight(kb.first, ctx.k));
            WeightSum q = tensorDecompose(GLWeight(ka.second, ctx.q()), GLWeight(kb.second, ctx.q()));
            for (auto& [du, mu] : u)
                for (auto& [dq, mq] : q) addTerm(out, {du, dq}, ca * cb * mu * mq);
        }
    return out;
}

inline EqKClass dualClass(const GrContext& ctx, const EqKClass& a) {
    EqKClass out;
    for (auto& [k, c] : a)
        addTerm(out,
                {dualWeight(GLWeight(k.first, ctx.k)).weight,
                 dualWeight(GLWeight(k.second, ctx.q())).weight},
                c);
    return out;
}

// O(t) absorption: uWeight - t on every term.
inline EqKClass twistClass(const GrContext& ctx, const EqKClass& a, int t) {
    EqKClass out;
    for (auto& [k, c] : a) addTerm(out, {twist(k.first, -t, std::size_t(ctx.k)), k.second}, c);
    return out;
}

// Character twist by (det V)^t: adds t to every entry of both factors.
inline EqKClass detVClass(const GrContext& ctx, const EqKClass& a, int t) {
    EqKClass out;
    for (auto& [k, c] : a)
        addTerm(out,
                {twist(k.first, t, std::size_t(ctx.k)), twist(k.second, t, std::size_t(ctx.q()))},
                c);
    return out;
}

// [Lambda^c V] = sum_{a+b=c} [Lambda^a U (x) Lambda^b (V/U)].
inline EqKClass lambdaVClass(const GrContext& ctx, int c) {
    if (c < 0 || c > ctx.n) throw std::invalid_argument("lambdaVClass: c out of range");
    EqKClass out;
    for (int a = 0; a <= std::min(c, ctx.k); ++a) {
        int b = c - a;
        if (b > ctx.q()) continue;
        addTerm(out, {Diagram(std::vector<int>(std::size_t(a), 1)),
                      Diagram(std::vector<int>(std::size_t(b), 1))},
                1);
    }
    return out;
}

inline mpz_class rankOf(const GrContext& ctx, const EqKClass& a) {
    mpz_class r = 0;
    for (auto& [k, c] : a)
        r += long(c) * dimGL(GLWeight(k.first, ctx.k)) * dimGL(GLWeight(k.second, ctx.q()));
    return r;
}

inline mpz_class eulerChi(const GrContext& ctx, const TwistedIrred& A, const EqKClass& b) {
    mpz_class chi = 0;
    for (auto& [k, c] : b)
        chi += long(c) * eulerChi(ctx, A, TwistedIrred{k.first, k.second, 0});
    return chi;
}

inline mpz_class eulerChi(const GrContext& ctx, const EqKClass& a, const EqKClass& b) {
    mpz_class chi = 0;
    for (auto& [k, c] : a)
        chi += long(c) * eulerChi(ctx, TwistedIrred{k.first, k.second, 0}, b);
    return chi;
}

inline mpz_class eulerChiG(const GrContext& ctx, const TwistedIrred& A, const EqKClass& b) {
    mpz_class chi = 0;
    for (auto& [k, c] : b)
        chi += long(c) * eulerChiG(ctx, A, TwistedIrred{k.first, k.second, 0});
    return chi;
}

// --- exact integer linear algebra ------------------------------------------

using ZMatrix = std::vector<std::vector<mpz_class>>;

// Fraction-free Bareiss determinant.
inline mpz_class determinant(ZMatrix m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    mpz_class sign = 1, prev = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (m[i][i] == 0) {
            std::size_t p = i + 1;
            while (p < n && m[p][i] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[i], m[p]);
            sign = -sign;
        }
        for (std::size_t r = i + 1; r < n; ++r)
            for (std::size_t c = i + 1; c < n; ++c) {
                mpz_class t = m[r][c] * m[i][i] - m[r][i] * m[i][c];
                mpz_divexact(m[r][c].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m[i][i];
    }
    return sign * m[n - 1][n - 1];
}

// Column-style Hermite normal form of the row lattice (rows = generators).
// Canonical form used only for lattice equality comparison.
inline ZMatrix hermiteNormalForm(ZMatrix m) {
    if (m.empty()) return m;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // reduce column c below row r by gcd elimination on rows
        while (true) {
            std::size_t piv = rows;
            for (std::size_t i = r; i < rows; ++i)
                if (m[i][c] != 0 && (piv == rows || abs(m[i][c]) < abs(m[piv][c]))) piv = i;
            if (piv == rows) break;
            std::swap(m[r], m[piv]);
            bool clean = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (m[i][c] == 0) continue;
                mpz_class q = m[i][c] / m[r][c];
                for (std::size_t j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
                if (m[i][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (m[r][c] == 0) continue;
        if (m[r][c] < 0)
            for (std::size_t j = 0; j < cols; ++j) m[r][j] = -m[r][j];
        for (std::size_t i = 0; i < r; ++i) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
            if (q != 0)
                for (std::size_t j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
        }
        ++r;
    }
    m.resize(r);  // drop zero rows
    return m;
}

// --- Kapranov coordinates ---------------------------------------------------

struct KapranovCoords {
    std::vector<mpz_class> coords;  // indexed by enumerateBox(n-k, k)

    friend bool operator==(const KapranovCoords&, const KapranovCoords&) = default;
};

inline TwistedIrred kapranovIrred(const GrContext& ctx, const Diagram& lambda) {
    return TwistedIrred{dualWeight(GLWeight(lambda, ctx.k)).weight, Diagram{}, 0};
}

struct KapranovBasis {
    std::vector<Diagram> diagrams;  // enumerateBox(n-k, k) order
    ZMatrix gram;                   // gram[i][j] = chi(U^{-d_i}, U^{-d_j})
};

namespace detail {

inline Memo<std::pair<int, int>, KapranovBasis>& kapranovMemo() {
    static Memo<std::pair<int, int>, KapranovBasis> memo;
    return memo;
}

}  // namespace detail

inline const KapranovBasis kapranovBasis(const GrContext& ctx) {
    KapranovBasis b;
    if (detail::kapranovMemo().lookup({ctx.k, ctx.n}, b)) return b;
    b.diagrams = enumerateBox(BoxSpec(ctx.q(), ctx.k));
    std::size_t N = b.diagrams.size();
    b.gram.assign(N, std::vector<mpz_class>(N));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            b.gram[i][j] = eulerChi(ctx, kapranovIrred(ctx, b.diagrams[i]),
                                    kapranovIrred(ctx, b.diagrams[j]));
    detail::kapranovMemo().store({ctx.k, ctx.n}, b);
    return b;
}

// Solves the square system M x = rhs exactly over the rationals and
// asserts an integral solution.
inline std::vector<mpz_class> solveIntegral(const ZMatrix& M, const std::vector<mpz_class>& rhs) {
    std::size_t n = M.size();
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = M[i][j];
        a[i][n] = rhs[i];
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) throw std::logic_error("solveIntegral: singular matrix");
        std::swap(a[c], a[p]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            mpq_class f = a[r][c] / a[c][c];
            for (std::size_t j = c; j <= n; ++j) a[r][j] -= f * a[c][j];
        }
    }
    std::vector<mpz_class> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        mpq_class v = a[i][n] / a[i][i];
        v.canonicalize();
        if (v.get_den() != 1) throw std::logic_error("solveIntegral: non-integral solution");
        x[i] = v.get_num();
    }
    return x;
}

// Coordinates of a K-class in the basis [U^{-lambda}], lambda in the box,
// determined by Euler pairings against every basis probe.
inline KapranovCoords kapranovCoordinates(const GrContext& ctx, const EqKClass& a) {
    const KapranovBasis basis = kapranovBasis(ctx);
    std::size_t N = basis.diagrams.size();
    std::vector<mpz_class> rhs(N);
    for (std::size_t i = 0; i < N; ++i)
        rhs[i] = eulerChi(ctx, kapranovIrred(ctx, basis.diagrams[i]), a);
    return KapranovCoords{solveIntegral(basis.gram, rhs)};
}

// |det| = 1 iff the classes form a Z-basis of K_0.
inline mpz_class collectionDeterminant(const GrContext& ctx, const std::vector<EqKClass>& classes) {
    const KapranovBasis basis = kapranovBasis(ctx);
    if (classes.size() != basis.diagrams.size())
        throw std::invalid_argument("collectionDeterminant: wrong class count");
    ZMatrix m;
    m.reserve(classes.size());
    for (auto& cls : classes) m.push_back(kapranovCoordinates(ctx, cls).coords);
    return determinant(std::move(m));
}

}  // namespace grex

#endif
