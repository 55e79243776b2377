#ifndef GREX_HOMCALC_HPP
#define GREX_HOMCALC_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <tuple>

#include "grex/bott_weil.hpp"
#include "grex/diagram.hpp"
#include "grex/littlewood.hpp"

namespace grex {

// Irreducible equivariant bundle U^u (x) (V/U)^q (x) O(t).
struct TwistedIrred {
    Diagram uWeight;
    Diagram qWeight;
    int twistO = 0;

    friend bool operator==(const TwistedIrred&, const TwistedIrred&) = default;
    friend auto operator<=>(const TwistedIrred&, const TwistedIrred&) = default;

    std::string str() const {
        std::string s = "U^" + uWeight.str() + " Q^" + qWeight.str();
        if (twistO != 0) s += "(" + std::to_string(twistO) + ")";
        return s;
    }
};

inline TwistedIrred irredO() { return TwistedIrred{Diagram{}, Diagram{}, 0}; }

// O(1) = det U^*: the twist is absorbed as uWeight - t*(1,...,1).
inline TwistedIrred normalizeTwist(const GrContext& ctx, const TwistedIrred& a) {
    if (a.twistO == 0) return a;
    return TwistedIrred{twist(a.uWeight, -a.twistO, std::size_t(ctx.k)), a.qWeight, 0};
}

// Per-degree multisets of GL(n) dominant weights.
using GradedIrrepSum = std::map<int, std::map<Diagram, long long>>;

inline TwistedIrred dualIrred(const GrContext& ctx, const TwistedIrred& a) {
    TwistedIrred na = normalizeTwist(ctx, a);
    return TwistedIrred{dualWeight(GLWeight(na.uWeight, ctx.k)).weight,
                        dualWeight(GLWeight(na.qWeight, ctx.q())).weight, 0};
}

namespace detail {

inline Memo<std::tuple<int, int, TwistedIrred, TwistedIrred>, GradedIrrepSum>& extMemo() {
    static Memo<std::tuple<int, int, TwistedIrred, TwistedIrred>, GradedIrrepSum> memo;
    return memo;
}

}  // namespace detail

// Ext^bullet(A, B) = H^bullet(X, A^dual (x) B) as graded GL(n)-representation.
// The internal tensor product splits into irreducibles, so this is a plain
// sum of Bott-Weil contributions.
inline GradedIrrepSum extGraded(const GrContext& ctx, const TwistedIrred& A, const TwistedIrred& B) {
    TwistedIrred a = normalizeTwist(ctx, A);
    TwistedIrred b = normalizeTwist(ctx, B);
    auto key = std::make_tuple(ctx.k, ctx.n, a, b);
    GradedIrrepSum out;
    if (detail::extMemo().lookup(key, out)) return out;

    WeightSum uPart = tensorDecompose(dualWeight(GLWeight(a.uWeight, ctx.k)),
                                      GLWeight(b.uWeight, ctx.k));
    WeightSum qPart = tensorDecompose(dualWeight(GLWeight(a.qWeight, ctx.q())),
                                      GLWeight(b.qWeight, ctx.q()));
    for (auto& [lambda, ml] : uPart)
        for (auto& [mu, mm] : qPart) {
            BBWResult r = cohomologyGr(ctx, mu, lambda);
            if (r.vanishing) continue;
            if (r.degree > ctx.dim())
                throw std::logic_error("extGraded: degree above k(n-k)");
            out[r.degree][r.dominant] += ml * mm;
        }
    detail::extMemo().store(key, out);
    return out;
}

// Multiplicity of the trivial GL(n)-weight per degree.
inline std::map<int, long long> extEquivariant(const GrContext& ctx, const TwistedIrred& A,
                                               const TwistedIrred& B) {
    std::map<int, long long> out;
    for (auto& [deg, irreps] : extGraded(ctx, A, B)) {
        auto it = irreps.find(Diagram{});
        if (it != irreps.end() && it->second > 0) out[deg] = it->second;
    }
    return out;
}

inline mpz_class eulerChi(const GrContext& ctx, const TwistedIrred& A, const TwistedIrred& B) {
    mpz_class chi = 0;
    for (auto& [deg, irreps] : extGraded(ctx, A, B)) {
        mpz_class d = 0;
        for (auto& [w, m] : irreps) d += long(m) * dimGL(GLWeight(w, ctx.n));
        chi += (deg % 2 == 0) ? d : -d;
    }
    return chi;
}

inline mpz_class eulerChiG(const GrContext& ctx, const TwistedIrred& A, const TwistedIrred& B) {
    mpz_class chi = 0;
    for (auto& [deg, m] : extEquivariant(ctx, A, B))
        chi += (deg % 2 == 0) ? long(m) : long(-m);
    return chi;
}

}  // namespace grex

#endif
