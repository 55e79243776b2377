#ifndef GREX_VERIFY_HPP
#define GREX_VERIFY_HPP

#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "grex/dualstair.hpp"

namespace grex {

inline constexpr const char* kToolVersion = "0.1.0";

// Machine-readable verification outcome.  status "fail" always carries at
// least one counterexample in details; "error" means an internal assertion
// tripped (a contradiction that must never occur on valid inputs).
struct Report {
    std::string check;
    int k = 0;
    int n = 0;
    std::string status = "pass";
    nlohmann::json details = nlohmann::json::object();
    long long elapsedMillis = 0;

    nlohmann::json toJson() const {
        return nlohmann::json{{"toolVersion", kToolVersion},
                              {"ctx", {{"k", k}, {"n", n}}},
                              {"check", check},
                              {"status", status},
                              {"details", details},
                              {"elapsedMillis", elapsedMillis}};
    }

    int exitCode() const { return status == "pass" ? 0 : (status == "fail" ? 1 : 3); }
};

inline mpz_class binomialMpz(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Runs f(0..count-1) on up to `jobs` worker threads.  The first exception
// wins and is rethrown on the calling thread.
template <class F>
inline void parallelFor(std::size_t count, int jobs, F&& f) {
    if (jobs < 1) jobs = 1;
    if (jobs == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex errMu;
    std::size_t workers = std::min<std::size_t>(std::size_t(jobs), count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(errMu);
                    if (!err) err = std::current_exception();
                    return;
                }
            }
        });
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

// Self-test mutations: deliberate defects the verifier must catch.
enum class Mutation { None, TwistSwap, MultiplicityPerturb, DuplicateClass };

inline nlohmann::json diagramJson(const Diagram& d) {
    return nlohmann::json(d.parts());
}

inline nlohmann::json irredJson(const TwistedIrred& a) {
    return nlohmann::json{{"u", diagramJson(a.uWeight)},
                          {"q", diagramJson(a.qWeight)},
                          {"t", a.twistO}};
}

inline nlohmann::json classJson(const EqKClass& a) {
    nlohmann::json out = nlohmann::json::array();
    for (auto& [key, c] : a)
        out.push_back({{"u", diagramJson(key.first)},
                       {"q", diagramJson(key.second)},
                       {"coeff", c}});
    return out;
}

// Generators of the decomposition components of one path, outer index =
// component.  TwistSwap exchanges the twists of components 1 and 2.
inline std::vector<std::vector<TwistedIrred>> pathGenerators(const GrContext& ctx,
                                                             const CanonicalPath& path,
                                                             Mutation mutation = Mutation::None) {
    auto dec = decompositionOf(ctx, path);
    std::vector<int> twists(dec.size());
    for (std::size_t i = 0; i < dec.size(); ++i) twists[i] = dec[i].second;
    if (mutation == Mutation::TwistSwap && dec.size() >= 3) std::swap(twists[1], twists[2]);
    std::vector<std::vector<TwistedIrred>> out(dec.size());
    for (std::size_t i = 0; i < dec.size(); ++i)
        for (auto& pr : dec[i].first.pairs)
            out[i].push_back(blockGenerator(ctx, pr.first, pr.second, twists[i]));
    return out;
}

// (1) Count identity: sum of block sizes equals binomial(n, k).
inline bool checkBlockCounts(const GrContext& ctx, const std::vector<CanonicalPath>& paths,
                             nlohmann::json& counterexamples) {
    mpz_class expected = binomialMpz(static_cast<unsigned long>(ctx.n),
                                     static_cast<unsigned long>(ctx.k));
    bool ok = true;
    for (auto& path : paths) {
        long long total = 0;
        for (auto& [blk, tw] : decompositionOf(ctx, path)) total += (long long)blk.pairs.size();
        if (mpz_class(long(total)) != expected) {
            ok = false;
            counterexamples.push_back({{"check", "blockCount"},
                                       {"path", path.str()},
                                       {"total", total},
                                       {"expected", expected.get_str()}});
        }
    }
    return ok;
}

// (2) Every generator is exceptional: equivariant self-Ext is k in degree 0.
inline bool checkExceptionality(const GrContext& ctx, const std::vector<CanonicalPath>& paths,
                                int jobs, nlohmann::json& counterexamples) {
    std::set<TwistedIrred> unique;
    for (auto& path : paths)
        for (auto& comp : pathGenerators(ctx, path))
            for (auto& g : comp) unique.insert(normalizeTwist(ctx, g));
    std::vector<TwistedIrred> items(unique.begin(), unique.end());
    std::vector<char> bad(items.size(), 0);
    parallelFor(items.size(), jobs, [&](std::size_t i) {
        auto self = extEquivariant(ctx, items[i], items[i]);
        bad[i] = !(self.size() == 1 && self.count(0) == 1 && self.at(0) == 1);
    });
    bool ok = true;
    for (std::size_t i = 0; i < items.size(); ++i)
        if (bad[i]) {
            ok = false;
            counterexamples.push_back({{"check", "exceptional"},
                                       {"generator", irredJson(items[i])}});
        }
    return ok;
}

// (3) Cross-component semi-orthogonality, exact: extGraded(g_j(j), g_i(i))
// is empty for i < j, for every generator pair of every path.  Components
// are generated by irreducibles, so this decides the vanishing.
inline bool checkCrossVanishing(const GrContext& ctx, const std::vector<CanonicalPath>& paths,
                                int jobs, nlohmann::json& counterexamples,
                                Mutation mutation = Mutation::None) {
    struct Prov {
        std::size_t path, i, j;
    };
    std::map<std::pair<TwistedIrred, TwistedIrred>, Prov> pairs;
    for (std::size_t p = 0; p < paths.size(); ++p) {
        auto gens = pathGenerators(ctx, paths[p], mutation);
        for (std::size_t j = 1; j < gens.size(); ++j)
            for (std::size_t i = 0; i < j; ++i)
                for (auto& gj : gens[j])
                    for (auto& gi : gens[i]) {
                        auto key = std::make_pair(normalizeTwist(ctx, gj), normalizeTwist(ctx, gi));
                        pairs.emplace(key, Prov{p, i, j});
                    }
    }
    std::vector<std::pair<std::pair<TwistedIrred, TwistedIrred>, Prov>> items(pairs.begin(),
                                                                              pairs.end());
    std::vector<char> bad(items.size(), 0);
    parallelFor(items.size(), jobs, [&](std::size_t t) {
        bad[t] = !extGraded(ctx, items[t].first.first, items[t].first.second).empty();
    });
    bool ok = true;
    for (std::size_t t = 0; t < items.size(); ++t) {
        if (!bad[t]) continue;
        ok = false;
        auto ext = extGraded(ctx, items[t].first.first, items[t].first.second);
        nlohmann::json degs = nlohmann::json::object();
        for (auto& [deg, irreps] : ext) {
            long long total = 0;
            for (auto& [w, m] : irreps) total += m;
            degs[std::to_string(deg)] = total;
        }
        counterexamples.push_back({{"check", "crossVanishing"},
                                   {"path", paths[items[t].second.path].str()},
                                   {"earlierComponent", items[t].second.i},
                                   {"laterComponent", items[t].second.j},
                                   {"src", irredJson(items[t].first.first)},
                                   {"dst", irredJson(items[t].first.second)},
                                   {"nonzeroExtMultiplicities", degs}});
    }
    return ok;
}

// (4) Fullness evidence: |det| of the Kapranov coordinate matrix is 1.
inline bool checkDeterminants(const GrContext& ctx, const std::vector<CanonicalPath>& paths,
                              int jobs, nlohmann::json& counterexamples,
                              Mutation mutation = Mutation::None) {
    std::vector<mpz_class> dets(paths.size());
    parallelFor(paths.size(), jobs, [&](std::size_t p) {
        std::vector<EqKClass> classes;
        for (auto& comp : pathGenerators(ctx, paths[p]))
            for (auto& g : comp) classes.push_back(classOf(ctx, g));
        if (mutation == Mutation::DuplicateClass && classes.size() >= 2)
            classes.back() = classes.front();
        dets[p] = collectionDeterminant(ctx, classes);
    });
    bool ok = true;
    for (std::size_t p = 0; p < paths.size(); ++p)
        if (dets[p] != 1 && dets[p] != -1) {
            ok = false;
            counterexamples.push_back({{"check", "determinant"},
                                       {"path", paths[p].str()},
                                       {"determinant", dets[p].get_str()}});
        }
    return ok;
}

// (5) Path independence: the row lattice of generator coordinates has the
// same Hermite normal form for every path.
inline bool checkLatticeIndependence(const GrContext& ctx,
                                     const std::vector<CanonicalPath>& paths, int jobs,
                                     nlohmann::json& counterexamples) {
    if (paths.empty()) return true;
    std::vector<ZMatrix> hnfs(paths.size());
    parallelFor(paths.size(), jobs, [&](std::size_t p) {
        ZMatrix m;
        for (auto& comp : pathGenerators(ctx, paths[p]))
            for (auto& g : comp)
                m.push_back(kapranovCoordinates(ctx, classOf(ctx, g)).coords);
        hnfs[p] = hermiteNormalForm(std::move(m));
    });
    bool ok = true;
    for (std::size_t p = 1; p < paths.size(); ++p)
        if (hnfs[p] != hnfs[0]) {
            ok = false;
            counterexamples.push_back({{"check", "latticeIndependence"},
                                       {"path", paths[p].str()},
                                       {"referencePath", paths[0].str()}});
        }
    return ok;
}

inline Report cmdVerifySOD(const GrContext& ctx, const std::vector<CanonicalPath>& paths,
                           int jobs = 1, Mutation mutation = Mutation::None) {
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.check = "sod";
    rep.k = ctx.k;
    rep.n = ctx.n;
    nlohmann::json cex = nlohmann::json::array();
    nlohmann::json sub = nlohmann::json::object();
    try {
        sub["blockCounts"] = checkBlockCounts(ctx, paths, cex) ? "pass" : "fail";
        sub["exceptionality"] = checkExceptionality(ctx, paths, jobs, cex) ? "pass" : "fail";
        sub["crossVanishing"] =
            checkCrossVanishing(ctx, paths, jobs, cex, mutation) ? "pass" : "fail";
        sub["determinant"] = checkDeterminants(ctx, paths, jobs, cex, mutation) ? "pass" : "fail";
        sub["latticeIndependence"] =
            checkLatticeIndependence(ctx, paths, jobs, cex) ? "pass" : "fail";
        long long gens = 0;
        if (!paths.empty())
            for (auto& [blk, tw] : decompositionOf(ctx, paths[0]))
                gens += (long long)blk.pairs.size();
        rep.details = {{"paths", paths.size()},
                       {"generatorsPerPath", gens},
                       {"checks", sub},
                       {"counterexamples", cex}};
        rep.status = cex.empty() ? "pass" : "fail";
    } catch (const std::logic_error& e) {
        rep.status = "error";
        rep.details = {{"message", e.what()}, {"checks", sub}, {"counterexamples", cex}};
    }
    rep.elapsedMillis = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    return rep;
}

// Certified equivariant-Ext vanishing: sufficient, never wrong.  Ext from an
// irreducible into a bundle vanishes if it vanishes into every filtration
// factor of the bundle's K-class.
inline bool sufficientVanishingG(const GrContext& ctx, const TwistedIrred& a, const EqKClass& e) {
    for (auto& [key, c] : e) {
        (void)c;
        if (!extEquivariant(ctx, a, TwistedIrred{key.first, key.second, 0}).empty()) return false;
    }
    return true;
}

inline Report cmdVerifyBlock(const GrContext& ctx, const HalfPoint& point) {
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.check = "block";
    rep.k = ctx.k;
    rep.n = ctx.n;
    nlohmann::json cex = nlohmann::json::array();
    nlohmann::json sub = nlohmann::json::object();
    try {
        Block blk = blockAt(ctx, point);
        rep.details["point"] = point.str();
        rep.details["size"] = blk.pairs.size();
        // Node intersection: Bl_p equals the intersection of the two
        // rounded-corner blocks (trivial when p is integral).
        {
            Block a = blockAt(ctx, HalfPoint{2 * point.ceilX(), 2 * point.floorY()});
            Block b = blockAt(ctx, HalfPoint{2 * point.floorX(), 2 * point.ceilY()});
            std::set<std::pair<Diagram, Diagram>> sa(a.pairs.begin(), a.pairs.end());
            std::set<std::pair<Diagram, Diagram>> sb(b.pairs.begin(), b.pairs.end());
            std::set<std::pair<Diagram, Diagram>> sp(blk.pairs.begin(), blk.pairs.end());
            std::set<std::pair<Diagram, Diagram>> inter;
            for (auto& pr : sa)
                if (sb.count(pr)) inter.insert(pr);
            bool nodeOk = inter == sp;
            sub["nodeIntersection"] = nodeOk ? "pass" : "fail";
            if (!nodeOk)
                cex.push_back({{"check", "nodeIntersection"}, {"point", point.str()}});
        }
        if (!point.integral()) {
            rep.details["checks"] = sub;
            rep.details["counterexamples"] = cex;
            rep.status = cex.empty() ? "pass" : "fail";
        } else {
            BlockContext bc(ctx, ctx.q() - point.x2 / 2, point.y2 / 2);
            gramEquivariant(bc);  // throws on triangularity violation
            sub["gramTriangular"] = "pass";

            auto pairs = bc.pairs();
            bool routesOk = true, deltaOk = true, suppOk = true, vanishOk = true;
            std::vector<EqKClass> classes(pairs.size());
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                auto& [l, m] = pairs[i];
                classes[i] = eClass(bc, l, m);
                if (!bc.degenerate()) {
                    auto [ep, cp] = eClassPushP(bc, l, m);
                    auto [ef, cf] = eClassPushF(bc, l, m);
                    if (!(cp.ok && cf.ok && ep == classes[i] && ef == classes[i])) {
                        routesOk = false;
                        cex.push_back({{"check", "threeRoute"},
                                       {"lambda", diagramJson(l)},
                                       {"mu", diagramJson(m)},
                                       {"pushPOk", cp.ok},
                                       {"pushFOk", cf.ok}});
                    }
                }
                for (auto& [key, c] : classes[i]) {
                    bool support = contains(l, key.first) &&
                                   contains(m, dualWeight(GLWeight(key.second, ctx.q())).weight);
                    if (c < 0 || !support) {
                        suppOk = false;
                        cex.push_back({{"check", "supportNonneg"},
                                       {"lambda", diagramJson(l)},
                                       {"mu", diagramJson(m)},
                                       {"term", diagramJson(key.first)},
                                       {"coeff", c}});
                    }
                }
            }
            // delta-pairing of block irreducibles against the dual classes
            for (std::size_t i = 0; i < pairs.size(); ++i)
                for (std::size_t j = 0; j < pairs.size(); ++j) {
                    mpz_class chi = eulerChiG(
                        ctx, bc.generator(pairs[i].first, pairs[i].second), classes[j]);
                    if (chi != (i == j ? 1 : 0)) {
                        deltaOk = false;
                        cex.push_back({{"check", "deltaPairing"},
                                       {"row", i},
                                       {"col", j},
                                       {"chi", chi.get_str()}});
                    }
                }
            // certified Ext vanishing whenever the indices are not contained
            for (std::size_t i = 0; i < pairs.size(); ++i)
                for (std::size_t j = 0; j < pairs.size(); ++j) {
                    bool contained = contains(pairs[j].first, pairs[i].first) &&
                                     contains(pairs[j].second, pairs[i].second);
                    if (contained) continue;
                    if (!sufficientVanishingG(
                            ctx, bc.generator(pairs[i].first, pairs[i].second), classes[j])) {
                        vanishOk = false;
                        cex.push_back({{"check", "orderingVanishing"}, {"row", i}, {"col", j}});
                    }
                }
            sub["threeRoute"] = routesOk ? "pass" : "fail";
            sub["supportNonneg"] = suppOk ? "pass" : "fail";
            sub["deltaPairing"] = deltaOk ? "pass" : "fail";
            sub["orderingVanishing"] = vanishOk ? "pass" : "fail";
            rep.details["checks"] = sub;
            rep.details["counterexamples"] = cex;
            rep.status = cex.empty() ? "pass" : "fail";
        }
    } catch (const std::logic_error& e) {
        rep.status = "error";
        rep.details["message"] = e.what();
    }
    rep.elapsedMillis = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    return rep;
}

struct StairInstance {
    StairKind kind;
    int w = 0;  // block data, E kinds only
    int h = 0;
    Diagram lambda;
    Diagram mu;
};

inline std::string stairKindName(StairKind k) {
    switch (k) {
        case StairKind::U: return "U";
        case StairKind::Q: return "Q";
        case StairKind::EL: return "E-L";
        default: return "E-M";
    }
}

// Every admissible staircase instance: maximal-width U and Q complexes on
// the Grassmannian, both E variants on all interior blocks.
inline std::vector<StairInstance> stairInstances(const GrContext& ctx, bool includeE = true) {
    std::vector<StairInstance> out;
    for (auto& l : enumerateBox(BoxSpec(ctx.q(), ctx.k)))
        if (l.part(0) == ctx.q()) out.push_back({StairKind::U, 0, 0, l, Diagram{}});
    for (auto& m : enumerateBox(BoxSpec(ctx.k, ctx.q())))
        if (m.part(0) == ctx.k) out.push_back({StairKind::Q, 0, 0, Diagram{}, m});
    if (!includeE) return out;
    for (int w = 1; w < ctx.q(); ++w)
        for (int h = 1; h < ctx.k; ++h) {
            BlockContext bc(ctx, w, h);
            for (auto& l : enumerateBox(bc.lambdaBox()))
                for (auto& m : enumerateBox(bc.muBox())) {
                    if (l.part(0) == w) out.push_back({StairKind::EL, w, h, l, m});
                    if (m.part(0) == ctx.k - h) out.push_back({StairKind::EM, w, h, l, m});
                }
        }
    return out;
}

inline StairComplex buildStaircase(const GrContext& ctx, const StairInstance& inst) {
    switch (inst.kind) {
        case StairKind::U: return staircaseU(ctx, inst.lambda);
        case StairKind::Q: return staircaseQ(ctx, inst.mu);
        case StairKind::EL:
            return staircaseE(BlockContext(ctx, inst.w, inst.h), inst.lambda, inst.mu,
                              StairVariant::L);
        default:
            return staircaseE(BlockContext(ctx, inst.w, inst.h), inst.lambda, inst.mu,
                              StairVariant::M);
    }
}

inline Report cmdVerifyStaircase(const GrContext& ctx, int jobs = 1,
                                 Mutation mutation = Mutation::None, bool includeE = true) {
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.check = "staircase";
    rep.k = ctx.k;
    rep.n = ctx.n;
    nlohmann::json cex = nlohmann::json::array();
    try {
        auto instances = stairInstances(ctx, includeE);
        std::vector<char> exact(instances.size(), 1), rankZero(instances.size(), 1);
        parallelFor(instances.size(), jobs, [&](std::size_t i) {
            StairComplex c = buildStaircase(ctx, instances[i]);
            if (mutation == Mutation::MultiplicityPerturb && i == 0 && c.terms.size() >= 2)
                c.terms[1].second = scaleClass(c.terms[1].second, 2);
            exact[i] = checkExactK(c);
            rankZero[i] = rankAlternation(ctx, c) == 0;
        });
        for (std::size_t i = 0; i < instances.size(); ++i)
            if (!exact[i] || !rankZero[i])
                cex.push_back({{"check", "staircaseExact"},
                               {"kind", stairKindName(instances[i].kind)},
                               {"w", instances[i].w},
                               {"h", instances[i].h},
                               {"lambda", diagramJson(instances[i].lambda)},
                               {"mu", diagramJson(instances[i].mu)},
                               {"exactInK", bool(exact[i])},
                               {"rankAlternationZero", bool(rankZero[i])}});
        rep.details = {{"instances", instances.size()}, {"counterexamples", cex}};
        rep.status = cex.empty() ? "pass" : "fail";
    } catch (const std::logic_error& e) {
        rep.status = "error";
        rep.details["message"] = e.what();
    }
    rep.elapsedMillis = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    return rep;
}

}  // namespace grex

#endif
