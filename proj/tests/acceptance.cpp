// End-to-end acceptance battery.  Every check is an exact integer
// identity; one line per criterion is printed and the process exits
// nonzero iff any criterion fails.

#include <chrono>
#include <iostream>
#include <random>
#include <thread>

#include "grex/verify.hpp"

using namespace grex;

namespace {

int jobsDefault() {
    unsigned hc = std::thread::hardware_concurrency();
    return std::max(4u, hc ? hc : 4u);
}

const std::vector<std::pair<int, int>> kSweep = {{2, 4}, {2, 5}, {3, 5}, {2, 6}, {3, 6}};

// 1. Block-count identity over all canonical paths.
bool criterion1() {
    for (auto [k, n] : kSweep) {
        GrContext ctx(k, n);
        mpz_class expected = binomialMpz(static_cast<unsigned long>(n),
                                         static_cast<unsigned long>(k));
        auto paths = enumeratePaths(ctx);
        if (paths.empty()) return false;
        for (auto& p : paths) {
            long long total = 0;
            for (auto& [blk, tw] : decompositionOf(ctx, p)) total += (long long)blk.pairs.size();
            if (mpz_class(long(total)) != expected) return false;
        }
    }
    return true;
}

// 2. Exact semi-orthogonality: cross-component Ext vanishing for all paths.
bool criterion2() {
    int jobs = jobsDefault();
    for (auto [k, n] : kSweep) {
        GrContext ctx(k, n);
        nlohmann::json cex = nlohmann::json::array();
        if (!checkCrossVanishing(ctx, enumeratePaths(ctx), jobs, cex)) return false;
    }
    return true;
}

// 3. Equivariant-collection pattern on every block.
bool criterion3() {
    for (auto [k, n] : {std::pair{2, 4}, std::pair{2, 5}, std::pair{3, 6}}) {
        GrContext ctx(k, n);
        for (int w = 1; w < ctx.q(); ++w)
            for (int h = 1; h < ctx.k; ++h) {
                BlockContext bc(ctx, w, h);
                auto pairs = bc.pairs();
                for (auto& [a, b] : pairs)
                    for (auto& [c, d] : pairs) {
                        auto e = extEquivariant(ctx, bc.generator(c, d), bc.generator(a, b));
                        bool contained = contains(a, c) && contains(b, d);
                        if (!contained && !e.empty()) return false;
                        if (a == c && b == d &&
                            e != std::map<int, long long>{{0, 1}})
                            return false;
                    }
            }
    }
    return true;
}

// 4. Diagonal-orthogonality: blocks at p and p + (t,t) are Ext-orthogonal
// after the twist by t.
bool criterion4() {
    for (auto [k, n] : {std::pair{2, 5}, std::pair{3, 6}}) {
        GrContext ctx(k, n);
        for (int x = 0; x <= ctx.q(); ++x)
            for (int y = 0; y <= ctx.k; ++y)
                for (int t = 1; x + t <= ctx.q() && y + t <= ctx.k; ++t) {
                    Block src = blockAt(ctx, HalfPoint{2 * (x + t), 2 * (y + t)});
                    Block dst = blockAt(ctx, HalfPoint{2 * x, 2 * y});
                    for (auto& ps : src.pairs)
                        for (auto& pd : dst.pairs) {
                            TwistedIrred g1 = blockGenerator(ctx, ps.first, ps.second, t);
                            TwistedIrred g0 = blockGenerator(ctx, pd.first, pd.second, 0);
                            if (!extGraded(ctx, g1, g0).empty()) return false;
                        }
                }
    }
    return true;
}

// 5. Three-route E-class agreement with passing certificates.
bool criterion5() {
    for (auto [k, n] : {std::pair{2, 5}, std::pair{3, 6}}) {
        GrContext ctx(k, n);
        for (int w = 1; w < ctx.q(); ++w)
            for (int h = 1; h < ctx.k; ++h) {
                BlockContext bc(ctx, w, h);
                for (auto& [l, m] : bc.pairs()) {
                    EqKClass g = eClassGram(bc, l, m);
                    auto [p, cp] = eClassPushP(bc, l, m);
                    auto [f, cf] = eClassPushF(bc, l, m);
                    if (!cp.ok || !cf.ok || g != p || g != f) return false;
                }
            }
    }
    return true;
}

// 6. Staircase K-exactness, ranks on the worked instance included.
bool criterion6() {
    for (auto [k, n] : {std::pair{2, 4}, std::pair{2, 5}, std::pair{3, 5}, std::pair{2, 6},
                        std::pair{3, 6}, std::pair{2, 7}, std::pair{3, 7}}) {
        GrContext ctx(k, n);
        Report r = cmdVerifyStaircase(ctx, jobsDefault(), Mutation::None,
                                      /*includeE=*/(n == 5 && k == 2) || (n == 6 && k == 3));
        if (r.status != "pass") return false;
    }
    GrContext g24(2, 4);
    StairComplex c = staircaseU(g24, Diagram{2, 1});
    std::vector<long long> ranks;
    for (auto& [label, cls] : c.terms) ranks.push_back(rankOf(g24, cls).get_si());
    return ranks == std::vector<long long>{2, 4, 4, 2};
}

// 7. Fullness evidence: unimodular coordinates, path-independent lattice.
bool criterion7() {
    int jobs = jobsDefault();
    for (auto [k, n] : {std::pair{2, 4}, std::pair{2, 5}, std::pair{3, 6}}) {
        GrContext ctx(k, n);
        auto paths = enumeratePaths(ctx);
        nlohmann::json cex = nlohmann::json::array();
        if (!checkDeterminants(ctx, paths, jobs, cex)) return false;
        if (!checkLatticeIndependence(ctx, paths, jobs, cex)) return false;
    }
    return true;
}

// 8. Combinatorial core.
bool criterion8() {
    for (int w = 0; w <= 12; ++w)
        for (int h = 0; w + h <= 12; ++h)
            for (auto& d : enumerateBox(BoxSpec(w, h)))
                if (decodeBinary(encodeBinary(d, BoxSpec(w, h)), BoxSpec(w, h)) != d)
                    return false;
    for (int w = 0; w <= 5; ++w)
        for (int h = 0; h <= 4; ++h)
            for (auto& d : enumerateBox(BoxSpec(w, h))) {
                if (w + h == 0) continue;
                BitWord word = encodeBinary(d, BoxSpec(w, h));
                BitWord rot;
                rot.bits.push_back(word.bits.back());
                rot.bits.insert(rot.bits.end(), word.bits.begin(), word.bits.end() - 1);
                if (encodeBinary(cyclicShift(d, BoxSpec(w, h), 1), BoxSpec(w, h)) != rot)
                    return false;
                if (d.part(0) == w && w > 0) {
                    auto a = bandCuts(d, BoxSpec(w, h));
                    auto b = bandCutsBinary(d, BoxSpec(w, h));
                    for (std::size_t i = 0; i < a.size(); ++i)
                        if (a[i].cut != b[i].cut || a[i].removed != b[i].removed) return false;
                }
            }
    auto cuts = bandCuts(Diagram{4, 4, 2}, BoxSpec(4, 3));
    return cuts.size() == 4 && cuts[0].cut == Diagram{3, 3, 2} && cuts[0].removed == 2 &&
           cuts[1].cut == Diagram{3, 2, 2} && cuts[1].removed == 3 &&
           cuts[2].cut == Diagram{3, 1, 1} && cuts[2].removed == 5 &&
           cuts[3].cut == Diagram{3, 1} && cuts[3].removed == 6;
}

// 9. Engine self-tests.
bool criterion9() {
    auto box = enumerateBox(BoxSpec(3, 3));
    for (auto& l : box)
        for (auto& m : box) {
            if (tensorDecompose(GLWeight(l, 3), GLWeight(m, 3)) !=
                tensorDecompose(GLWeight(m, 3), GLWeight(l, 3)))
                return false;
            for (auto& [alpha, mult] : tensorDecompose(GLWeight(l, 3), GLWeight(m, 3))) {
                (void)mult;
                for (std::size_t i = 0; i < 3; ++i) {
                    if (alpha.part(i) < l.part(i) + m.part(2)) return false;
                    if (alpha.part(i) > l.part(0) + m.part(i)) return false;
                }
            }
            for (auto& [alpha, mult] :
                 tensorDecompose(GLWeight(l, 3), dualWeight(GLWeight(m, 3)))) {
                (void)mult;
                if (alpha.part(2) >= 0 && !contains(l, alpha)) return false;
            }
        }

    GrContext g25(2, 5);
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> part(-2, 3), tw(-2, 2);
    auto randomDiagram = [&](int rows) {
        std::vector<int> v(static_cast<std::size_t>(rows));
        for (int& x : v) x = part(rng);
        std::sort(v.rbegin(), v.rend());
        return Diagram(std::move(v));
    };
    for (int trial = 0; trial < 200; ++trial) {
        TwistedIrred f{randomDiagram(2), randomDiagram(3), tw(rng)};
        mpz_class lhs = eulerChi(g25, irredO(), f);
        TwistedIrred fd = dualIrred(g25, f);
        fd.twistO -= g25.n;
        mpz_class rhs = eulerChi(g25, irredO(), fd);
        if (g25.dim() % 2) rhs = -rhs;
        if (lhs != rhs) return false;
    }

    std::uniform_int_distribution<int> rk(1, 4), pt(-3, 4);
    for (int trial = 0; trial < 500; ++trial) {
        int r = rk(rng);
        auto randomWeight = [&] {
            std::vector<int> v(static_cast<std::size_t>(r));
            for (int& x : v) x = pt(rng);
            std::sort(v.rbegin(), v.rend());
            return Diagram(std::move(v));
        };
        GLWeight a(randomWeight(), r), b(randomWeight(), r);
        mpz_class total = 0;
        for (auto& [g, m] : tensorDecompose(a, b)) total += long(m) * dimGL(GLWeight(g, r));
        if (total != dimGL(a) * dimGL(b)) return false;
    }
    return true;
}

// 10. Mutation sensitivity: seeded defects must be caught with concrete
// counterexamples.
bool criterion10() {
    GrContext g24(2, 4);
    auto paths = enumeratePaths(g24);

    nlohmann::json cex2 = nlohmann::json::array();
    if (checkCrossVanishing(g24, paths, 2, cex2, Mutation::TwistSwap)) return false;
    if (cex2.empty()) return false;

    Report r6 = cmdVerifyStaircase(g24, 2, Mutation::MultiplicityPerturb);
    if (r6.status != "fail" || r6.details["counterexamples"].empty()) return false;

    nlohmann::json cex7 = nlohmann::json::array();
    if (checkDeterminants(g24, paths, 2, cex7, Mutation::DuplicateClass)) return false;
    if (cex7.empty()) return false;
    return true;
}

}  // namespace

int main() {
    struct Item {
        const char* name;
        bool (*run)();
    };
    const Item items[] = {
        {"block-count identity", criterion1},
        {"semi-orthogonality", criterion2},
        {"equivariant-collection pattern", criterion3},
        {"diagonal orthogonality", criterion4},
        {"three-route E-class agreement", criterion5},
        {"staircase K-exactness", criterion6},
        {"fullness evidence", criterion7},
        {"combinatorial core", criterion8},
        {"engine self-tests", criterion9},
        {"mutation sensitivity", criterion10},
    };
    int failures = 0;
    int idx = 0;
    for (auto& item : items) {
        ++idx;
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = item.run();
        } catch (const std::exception& e) {
            std::cout << "criterion " << idx << " (" << item.name
                      << "): error: " << e.what() << "\n";
            ++failures;
            continue;
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::cout << "criterion " << idx << " (" << item.name << "): "
                  << (ok ? "pass" : "fail") << " [" << ms << " ms]\n";
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
