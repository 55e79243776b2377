#ifndef GREX_DUALSTAIR_HPP
#define GREX_DUALSTAIR_HPP

#include <optional>
#include <string>
#include <vector>

#include "grex/kclass.hpp"
#include "grex/pathblocks.hpp"

namespace grex {

// The block Bl_{w,h} = Y_{w,h} x Y_{k-h, n-k-w} attached to the integer
// point (n-k-w, h).  The pushforward routes need 0 < h < k (p-route) and
// 0 < w < n-k (f-route); the Gram route and degenerate blocks allow the
// closed bounds.
struct BlockContext {
    GrContext ctx;
    int w = 0;
    int h = 0;

    BlockContext(GrContext c, int w_, int h_) : ctx(c), w(w_), h(h_) {
        if (w < 0 || w > ctx.q() || h < 0 || h > ctx.k)
            throw std::invalid_argument("BlockContext: (w,h) outside closed bounds");
    }

    BoxSpec lambdaBox() const { return BoxSpec(w, h); }
    BoxSpec muBox() const { return BoxSpec(ctx.k - h, ctx.q() - w); }
    bool degenerate() const { return w == 0 || w == ctx.q() || h == 0 || h == ctx.k; }

    // Pairs in enumeration order; the order refines componentwise containment.
    std::vector<std::pair<Diagram, Diagram>> pairs() const {
        std::vector<std::pair<Diagram, Diagram>> out;
        auto ls = enumerateBox(lambdaBox());
        auto ms = enumerateBox(muBox());
        for (auto& l : ls)
            for (auto& m : ms) out.push_back({l, m});
        return out;
    }

    bool containsPair(const Diagram& lambda, const Diagram& mu) const {
        return fitsInBox(lambda, lambdaBox()) && fitsInBox(mu, muBox());
    }

    // U^lambda (x) (V/U)^{-mu}
    TwistedIrred generator(const Diagram& lambda, const Diagram& mu) const {
        return TwistedIrred{lambda, dualWeight(GLWeight(mu, ctx.q())).weight, 0};
    }
};

// chi_G pairing matrix of the block generators in enumeration order.
// Upper unitriangular: entries vanish unless both row indices are
// contained in the column indices, with 1 on the diagonal.
inline ZMatrix gramEquivariant(const BlockContext& bc) {
    auto pairs = bc.pairs();
    std::size_t N = pairs.size();
    ZMatrix m(N, std::vector<mpz_class>(N));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            m[i][j] = eulerChiG(bc.ctx, bc.generator(pairs[i].first, pairs[i].second),
                                bc.generator(pairs[j].first, pairs[j].second));
            bool contained = contains(pairs[j].first, pairs[i].first) &&
                             contains(pairs[j].second, pairs[i].second);
            if (!contained && m[i][j] != 0)
                throw std::logic_error("gramEquivariant: triangularity violation");
            if (i == j && m[i][j] != 1)
                throw std::logic_error("gramEquivariant: diagonal entry not 1");
        }
    return m;
}

namespace detail {

inline Memo<std::tuple<int, int, int, int, Diagram, Diagram>, EqKClass>& eClassMemo() {
    static Memo<std::tuple<int, int, int, int, Diagram, Diagram>, EqKClass> memo;
    return memo;
}

}  // namespace detail

// The unique class supported on {(gamma, delta) : gamma <= lambda,
// delta <= mu} whose chi_G pairing against the block generators is the
// delta at (lambda, mu).  Solved by back substitution against the
// unitriangular chi_G matrix.
inline EqKClass eClassGram(const BlockContext& bc, const Diagram& lambda, const Diagram& mu) {
    if (!bc.containsPair(lambda, mu))
        throw std::invalid_argument("eClassGram: pair not in block");
    auto key = std::make_tuple(bc.ctx.k, bc.ctx.n, bc.w, bc.h, lambda, mu);
    EqKClass out;
    if (detail::eClassMemo().lookup(key, out)) return out;

    // sub-block of pairs componentwise below (lambda, mu), enumeration order
    std::vector<std::pair<Diagram, Diagram>> sub;
    for (auto& pr : bc.pairs())
        if (contains(lambda, pr.first) && contains(mu, pr.second)) sub.push_back(pr);

    std::size_t N = sub.size();
    std::vector<mpz_class> coeff(N);
    // back substitution: rows from the top pair downwards
    for (std::size_t ii = N; ii-- > 0;) {
        mpz_class target = (sub[ii].first == lambda && sub[ii].second == mu) ? 1 : 0;
        mpz_class acc = 0;
        for (std::size_t j = ii + 1; j < N; ++j) {
            if (coeff[j] == 0) continue;
            acc += coeff[j] * eulerChiG(bc.ctx, bc.generator(sub[ii].first, sub[ii].second),
                                        bc.generator(sub[j].first, sub[j].second));
        }
        coeff[ii] = target - acc;  // diagonal chi_G is 1
    }
    for (std::size_t i = 0; i < N; ++i) {
        if (coeff[i] == 0) continue;
        if (!coeff[i].fits_slong_p())
            throw std::logic_error("eClassGram: coefficient overflow");
        TwistedIrred g = bc.generator(sub[i].first, sub[i].second);
        addTerm(out, {g.uWeight, g.qWeight}, coeff[i].get_si());
    }
    detail::eClassMemo().store(key, out);
    return out;
}

// Vanishing certificate for a pushforward route: every irreducible
// summand must have no higher direct image.
struct PushCertificate {
    bool ok = true;
    long long summands = 0;
    std::vector<std::string> failures;
};

// First pushforward route: direct image along Fl(k-h, k; V) -> Gr(k, n).
// The (V/W)^{-mu} factor is filtered by (V/U)^{-nu} (x) (U/W)^{-mu/nu};
// each (U/W) summand is pushed by relative Bott-Weil on the merged
// (U/W | W) blocks.
inline std::pair<EqKClass, PushCertificate> eClassPushP(const BlockContext& bc,
                                                        const Diagram& lambda,
                                                        const Diagram& mu) {
    if (!bc.containsPair(lambda, mu))
        throw std::invalid_argument("eClassPushP: pair not in block");
    const GrContext& ctx = bc.ctx;
    int h = bc.h;
    EqKClass out;
    PushCertificate cert;

    for (auto& nu : enumerateBox(BoxSpec(mu.part(0), int(mu.rows())))) {
        if (!contains(mu, nu)) continue;
        for (auto& [gamma, mSkew] : skewExpand(mu, nu)) {
            if (int(gamma.rows()) > h) continue;  // Schur functor of rank-h bundle vanishes
            WeightSum prod = tensorDecompose(GLWeight(lambda, h),
                                             dualWeight(GLWeight(gamma, h)));
            for (auto& [beta, mTens] : prod) {
                ++cert.summands;
                BBWResult r = pushInner({{beta, h}, {Diagram{}, ctx.k - h}});
                if (r.vanishing) continue;
                if (r.degree > 0) {
                    cert.ok = false;
                    cert.failures.push_back("higher direct image R^" + std::to_string(r.degree) +
                                            " for summand " + beta.str());
                    continue;
                }
                addTerm(out, {r.dominant, dualWeight(GLWeight(nu, ctx.q())).weight},
                        mSkew * mTens);
            }
        }
    }
    return {out, cert};
}

// Second pushforward route: direct image along Fl(k, n-w; V) -> Gr(k, n).
// K^lambda is filtered by U^alpha (x) (K/U)^{lambda/alpha}; each (K/U)
// summand is pushed on the merged (V/K | K/U) blocks.
inline std::pair<EqKClass, PushCertificate> eClassPushF(const BlockContext& bc,
                                                        const Diagram& lambda,
                                                        const Diagram& mu) {
    if (!bc.containsPair(lambda, mu))
        throw std::invalid_argument("eClassPushF: pair not in block");
    const GrContext& ctx = bc.ctx;
    int w = bc.w;
    int m1 = ctx.q() - w;  // rank of K/U
    EqKClass out;
    PushCertificate cert;

    for (auto& alpha : enumerateBox(BoxSpec(lambda.part(0), int(lambda.rows())))) {
        if (!contains(lambda, alpha)) continue;
        for (auto& [gamma, mSkew] : skewExpand(lambda, alpha)) {
            if (int(gamma.rows()) > m1) continue;
            WeightSum prod = tensorDecompose(GLWeight(gamma, m1),
                                             dualWeight(GLWeight(mu, m1)));
            for (auto& [tau, mTens] : prod) {
                ++cert.summands;
                BBWResult r = pushInner({{Diagram{}, w}, {tau, m1}});
                if (r.vanishing) continue;
                if (r.degree > 0) {
                    cert.ok = false;
                    cert.failures.push_back("higher direct image R^" + std::to_string(r.degree) +
                                            " for summand " + tau.str());
                    continue;
                }
                addTerm(out, {alpha, r.dominant}, mSkew * mTens);
            }
        }
    }
    return {out, cert};
}

// Canonical E-class: Gram route for non-degenerate blocks, the direct
// irreducible for degenerate ones (where one factor box is empty).
inline EqKClass eClass(const BlockContext& bc, const Diagram& lambda, const Diagram& mu) {
    if (bc.degenerate()) {
        TwistedIrred g = bc.generator(lambda, mu);
        return classOf(bc.ctx, g);
    }
    return eClassGram(bc, lambda, mu);
}

// --- staircase complexes ----------------------------------------------------

enum class StairKind { U, Q, EL, EM };

struct StairComplex {
    StairKind kind;
    std::vector<std::pair<std::string, EqKClass>> terms;
};

inline bool checkExactK(const StairComplex& c) {
    EqKClass acc;
    int sign = 1;
    for (auto& [label, cls] : c.terms) {
        acc = addClass(acc, scaleClass(cls, sign));
        sign = -sign;
    }
    return acc.empty();
}

inline mpz_class rankAlternation(const GrContext& ctx, const StairComplex& c) {
    mpz_class acc = 0;
    int sign = 1;
    for (auto& [label, cls] : c.terms) {
        acc += sign * rankOf(ctx, cls);
        sign = -sign;
    }
    return acc;
}

// 0 -> U^lambda -> U^{lambda^(1)} (x) L^{c_1}V -> ... -> U^{lambda{1}}(1) -> 0
// for maximal-width lambda in the (n-k) x k box.  The boundary twist is
// O(1) together with the det V character, i.e. det(V/U).
inline StairComplex staircaseU(const GrContext& ctx, const Diagram& lambda) {
    BoxSpec box(ctx.q(), ctx.k);
    if (!fitsInBox(lambda, box) || lambda.part(0) != ctx.q())
        throw std::invalid_argument("staircaseU: need lambda_1 = n-k within the box");
    StairComplex c{StairKind::U, {}};
    c.terms.push_back({"U^" + lambda.str(),
                       classOf(ctx, TwistedIrred{lambda, Diagram{}, 0})});
    for (auto& cut : bandCuts(lambda, box)) {
        EqKClass t = mulClass(ctx, classOf(ctx, TwistedIrred{cut.cut, Diagram{}, 0}),
                              lambdaVClass(ctx, int(cut.removed)));
        c.terms.push_back({"U^" + cut.cut.str() + " (x) L^" + std::to_string(cut.removed) + "V",
                           t});
    }
    Diagram shifted = cyclicShift(lambda, box, 1);
    EqKClass last = detVClass(ctx, twistClass(ctx, classOf(ctx, TwistedIrred{shifted, Diagram{}, 0}), 1), 1);
    c.terms.push_back({"U^" + shifted.str() + "(1)", last});
    return c;
}

// Mirror complex on the quotient side, with dual exterior powers; the
// boundary twist here is plain O(1) = det U^*.
inline StairComplex staircaseQ(const GrContext& ctx, const Diagram& mu) {
    BoxSpec box(ctx.k, ctx.q());
    if (!fitsInBox(mu, box) || mu.part(0) != ctx.k)
        throw std::invalid_argument("staircaseQ: need mu_1 = k within the box");
    auto qDual = [&](const Diagram& m) {
        return classOf(ctx, TwistedIrred{Diagram{}, dualWeight(GLWeight(m, ctx.q())).weight, 0});
    };
    StairComplex c{StairKind::Q, {}};
    c.terms.push_back({"Q^-" + mu.str(), qDual(mu)});
    for (auto& cut : bandCuts(mu, box)) {
        EqKClass t = mulClass(ctx, qDual(cut.cut),
                              dualClass(ctx, lambdaVClass(ctx, int(cut.removed))));
        c.terms.push_back({"Q^-" + cut.cut.str() + " (x) L^" + std::to_string(cut.removed) + "V*",
                           t});
    }
    Diagram shifted = cyclicShift(mu, box, 1);
    c.terms.push_back({"Q^-" + shifted.str() + "(1)", twistClass(ctx, qDual(shifted), 1)});
    return c;
}

enum class StairVariant { L, M };

// Staircase complexes for the dual exceptional bundles.  Variant L needs
// lambda_1 = w and ends in the block Bl_{w,h-1}; variant M needs
// mu_1 = k-h and ends in Bl_{w+1,h}.
inline StairComplex staircaseE(const BlockContext& bc, const Diagram& lambda, const Diagram& mu,
                               StairVariant variant) {
    if (!bc.containsPair(lambda, mu))
        throw std::invalid_argument("staircaseE: pair not in block");
    const GrContext& ctx = bc.ctx;
    StairComplex c{variant == StairVariant::L ? StairKind::EL : StairKind::EM, {}};
    auto eLabel = [](const Diagram& l, const Diagram& m) {
        return "E^{" + l.str() + "," + m.str() + "}";
    };
    c.terms.push_back({eLabel(lambda, mu), eClass(bc, lambda, mu)});

    if (variant == StairVariant::L) {
        if (lambda.part(0) != bc.w)
            throw std::invalid_argument("staircaseE(L): need lambda_1 = w");
        BoxSpec box = bc.lambdaBox();
        for (auto& cut : bandCuts(lambda, box)) {
            c.terms.push_back({eLabel(cut.cut, mu) + " (x) L^" + std::to_string(cut.removed) + "V",
                               mulClass(ctx, eClass(bc, cut.cut, mu),
                                        lambdaVClass(ctx, int(cut.removed)))});
        }
        Diagram lShift = cyclicShift(lambda, box, 1);
        Diagram mTwist = twist(mu, 1, std::size_t(ctx.q() - bc.w));
        BlockContext next(ctx, bc.w, bc.h - 1);
        EqKClass last = detVClass(
            ctx, twistClass(ctx, eClass(next, lShift, mTwist), 1), 1);
        c.terms.push_back({eLabel(lShift, mTwist) + "(1)", last});
    } else {
        if (mu.part(0) != ctx.k - bc.h)
            throw std::invalid_argument("staircaseE(M): need mu_1 = k-h");
        BoxSpec box = bc.muBox();
        for (auto& cut : bandCuts(mu, box)) {
            c.terms.push_back({eLabel(lambda, cut.cut) + " (x) L^" + std::to_string(cut.removed) + "V*",
                               mulClass(ctx, eClass(bc, lambda, cut.cut),
                                        dualClass(ctx, lambdaVClass(ctx, int(cut.removed))))});
        }
        Diagram mShift = cyclicShift(mu, box, 1);
        Diagram lTwist = twist(lambda, 1, std::size_t(bc.h));
        BlockContext next(ctx, bc.w + 1, bc.h);
        c.terms.push_back({eLabel(lTwist, mShift) + "(1)",
                           twistClass(ctx, eClass(next, lTwist, mShift), 1)});
    }
    return c;
}

}  // namespace grex

#endif
