// Command-line front end: calculator subcommands for the individual
// engines plus the end-to-end verification commands.
//
// Exit codes: 0 all pass, 1 at least one verification failure, 2 invalid
// input, 3 internal assertion failure.

#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "grex/cache.hpp"
#include "grex/verify.hpp"

using namespace grex;

namespace {

struct CommonOpts {
    int n = 0;
    int k = 0;
    int jobs = 1;
    bool json = false;
    bool force = false;
    std::string cacheFile;
};

void addCtx(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--n", o.n, "dimension of the ambient space")->required();
    cmd->add_option("--k", o.k, "rank of the tautological subbundle")->required();
}

GrContext makeCtx(const CommonOpts& o) {
    if (o.n > 10 && !o.force)
        throw std::invalid_argument(
            "n > 10 refused: path and weight enumeration grow exponentially in n "
            "(use --force to override)");
    return GrContext(o.k, o.n);
}

TwistedIrred parseIrred(const std::string& s) {
    std::size_t p1 = s.find(';');
    std::size_t p2 = p1 == std::string::npos ? std::string::npos : s.find(';', p1 + 1);
    if (p2 == std::string::npos)
        throw std::invalid_argument("bundle format is \"[u];[q];t\", e.g. \"[1];[];0\"");
    return TwistedIrred{Diagram::parse(s.substr(0, p1)),
                        Diagram::parse(s.substr(p1 + 1, p2 - p1 - 1)),
                        std::stoi(s.substr(p2 + 1))};
}

HalfPoint parsePoint(const std::string& s) {
    auto pts = parsePathString(s);
    if (pts.size() != 1) throw std::invalid_argument("point format is \"x,y\"");
    return pts[0];
}

std::string classPlain(const EqKClass& a) {
    if (a.empty()) return "0";
    std::string out;
    for (auto& [key, c] : a) {
        if (!out.empty()) out += " + ";
        out += std::to_string(c) + "*(U^" + key.first.str() + " Q^" + key.second.str() + ")";
    }
    return out;
}

Mutation parseMutation(const std::string& s) {
    if (s.empty() || s == "none") return Mutation::None;
    if (s == "twist-swap") return Mutation::TwistSwap;
    if (s == "multiplicity") return Mutation::MultiplicityPerturb;
    if (s == "duplicate-class") return Mutation::DuplicateClass;
    throw std::invalid_argument("unknown mutation: " + s);
}

std::vector<CanonicalPath> resolvePaths(const GrContext& ctx, const std::string& pathStr,
                                        bool allPaths) {
    if (allPaths) return enumeratePaths(ctx);
    if (pathStr.empty())
        throw std::invalid_argument("need --path or --all-paths");
    return {validatePath(ctx, parsePathString(pathStr))};
}

int emitReport(const Report& rep, bool json) {
    if (json) {
        std::cout << rep.toJson().dump(2) << "\n";
    } else {
        std::cout << rep.check << " Gr(" << rep.k << "," << rep.n << "): " << rep.status << " ("
                  << rep.elapsedMillis << " ms)\n";
        if (rep.details.contains("checks"))
            for (auto& [name, verdict] : rep.details["checks"].items())
                std::cout << "  " << name << ": " << verdict.get<std::string>() << "\n";
        if (rep.details.contains("counterexamples"))
            for (auto& cex : rep.details["counterexamples"])
                std::cout << "  counterexample: " << cex.dump() << "\n";
        if (rep.details.contains("message"))
            std::cout << "  " << rep.details["message"].get<std::string>() << "\n";
    }
    return rep.exitCode();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lattice-path collections on Grassmannians: calculators and verifiers"};
    app.require_subcommand(1);

    CommonOpts o;
    app.add_flag("--json", o.json, "JSON output");
    app.add_flag("--force", o.force, "override the n > 10 resource guard");
    app.add_option("--cache", o.cacheFile, "memo cache file (JSON lines)");
    app.add_option("--jobs", o.jobs, "worker threads for sweeps")->default_val(1);

    // --- calculators --------------------------------------------------------
    std::string sa, sb, sc, sPath, sPoint, sSrc, sDst, sKind = "u", sRoute = "gram", sMut;
    int rank = 0, w = 0, h = 0, twistT = 0, cArg = 0;
    bool allPaths = false;
    (void)cArg;

    auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient");
    lr->add_option("--a", sa)->required();
    lr->add_option("--b", sb)->required();
    lr->add_option("--c", sc)->required();

    auto* dim = app.add_subcommand("dim", "Weyl dimension of a GL weight");
    dim->add_option("--weight", sa)->required();
    dim->add_option("--rank", rank)->required();

    auto* bbw = app.add_subcommand("bbw", "cohomology of U^u (x) (V/U)^q");
    addCtx(bbw, o);
    bbw->add_option("--u", sa)->required();
    bbw->add_option("--q", sb)->required();

    auto* ext = app.add_subcommand("ext", "graded Ext between twisted irreducibles");
    addCtx(ext, o);
    ext->add_option("--src", sSrc, "source bundle \"[u];[q];t\"")->required();
    ext->add_option("--dst", sDst, "target bundle \"[u];[q];t\"")->required();

    auto* kcl = app.add_subcommand("kclass", "rank and Kapranov coordinates of a class");
    addCtx(kcl, o);
    kcl->add_option("--u", sa)->default_val("[]");
    kcl->add_option("--q", sb)->default_val("[]");
    kcl->add_option("--t", twistT)->default_val(0);

    auto* ecl = app.add_subcommand("eclass", "dual exceptional bundle class on a block");
    ecl->set_help_flag("--help", "print help");  // frees -h/--h for the block height
    addCtx(ecl, o);
    ecl->add_option("--w", w)->required();
    ecl->add_option("--h", h)->required();
    ecl->add_option("--lambda", sa)->required();
    ecl->add_option("--mu", sb)->required();
    ecl->add_option("--route", sRoute, "gram | pushp | pushf")->default_val("gram");

    auto* stair = app.add_subcommand("staircase", "staircase complex and exactness verdict");
    stair->set_help_flag("--help", "print help");
    addCtx(stair, o);
    stair->add_option("--kind", sKind, "u | q | el | em")->required();
    stair->add_option("--lambda", sa)->default_val("[]");
    stair->add_option("--mu", sb)->default_val("[]");
    stair->add_option("--w", w)->default_val(0);
    stair->add_option("--h", h)->default_val(0);

    auto* blocks = app.add_subcommand("blocks", "blocks of a path or a point");
    addCtx(blocks, o);
    blocks->add_option("--path", sPath);
    blocks->add_option("--point", sPoint);

    auto* paths = app.add_subcommand("paths", "enumerate canonical paths");
    addCtx(paths, o);
    paths->add_flag("--enumerate", allPaths, "list every canonical path (default)");

    // --- verifiers ----------------------------------------------------------
    auto* vsod = app.add_subcommand("verify-sod", "full decomposition verification");
    addCtx(vsod, o);
    vsod->add_option("--path", sPath);
    vsod->add_flag("--all-paths", allPaths);
    vsod->add_option("--mutate", sMut, "none | twist-swap | duplicate-class");

    auto* vblk = app.add_subcommand("verify-block", "single-block verification");
    addCtx(vblk, o);
    vblk->add_option("--point", sPoint)->required();

    auto* vst = app.add_subcommand("verify-staircase", "all staircase instances");
    addCtx(vst, o);
    vst->add_option("--mutate", sMut, "none | multiplicity");

    for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; }))
        sub->fallthrough();  // global flags may follow the subcommand

    CLI11_PARSE(app, argc, argv);

    struct CacheGuard {
        std::string file;
        ~CacheGuard() {
            if (!file.empty()) saveCache(file);
        }
    } guard;
    if (!o.cacheFile.empty()) {
        loadCache(o.cacheFile);
        guard.file = o.cacheFile;
    }

    try {
        if (lr->parsed()) {
            long long v = lrCoefficient(Diagram::parse(sa), Diagram::parse(sb), Diagram::parse(sc));
            if (o.json)
                std::cout << nlohmann::json{{"value", v}}.dump() << "\n";
            else
                std::cout << v << "\n";
            return 0;
        }
        if (dim->parsed()) {
            mpz_class v = dimGL(GLWeight(Diagram::parse(sa), rank));
            if (o.json)
                std::cout << nlohmann::json{{"value", v.get_str()}}.dump() << "\n";
            else
                std::cout << v << "\n";
            return 0;
        }
        if (bbw->parsed()) {
            GrContext ctx = makeCtx(o);
            BBWResult r = cohomologyGr(ctx, Diagram::parse(sb), Diagram::parse(sa));
            if (o.json) {
                nlohmann::json j{{"vanishing", r.vanishing}};
                if (!r.vanishing) {
                    j["degree"] = r.degree;
                    j["dominant"] = r.dominant.parts();
                }
                std::cout << j.dump() << "\n";
            } else if (r.vanishing) {
                std::cout << "vanishing\n";
            } else {
                std::cout << "degree " << r.degree << ", dominant " << r.dominant.str() << "\n";
            }
            return 0;
        }
        if (ext->parsed()) {
            GrContext ctx = makeCtx(o);
            auto table = extGraded(ctx, parseIrred(sSrc), parseIrred(sDst));
            if (o.json) {
                nlohmann::json degs = nlohmann::json::object();
                for (auto& [deg, irreps] : table) {
                    nlohmann::json list = nlohmann::json::array();
                    for (auto& [wt, m] : irreps)
                        list.push_back({{"weight", wt.parts()}, {"mult", m}});
                    degs[std::to_string(deg)] = list;
                }
                std::cout << nlohmann::json{{"degrees", degs}}.dump() << "\n";
            } else if (table.empty()) {
                std::cout << "0\n";
            } else {
                for (auto& [deg, irreps] : table) {
                    std::cout << "degree " << deg << ":";
                    for (auto& [wt, m] : irreps) std::cout << " " << wt.str() << " x" << m;
                    std::cout << "\n";
                }
            }
            return 0;
        }
        if (kcl->parsed()) {
            GrContext ctx = makeCtx(o);
            EqKClass cls = classOf(
                ctx, TwistedIrred{Diagram::parse(sa), Diagram::parse(sb), twistT});
            auto coords = kapranovCoordinates(ctx, cls);
            if (o.json) {
                nlohmann::json cj = nlohmann::json::array();
                for (auto& x : coords.coords) cj.push_back(x.get_str());
                std::cout << nlohmann::json{{"class", classJson(cls)},
                                            {"rank", rankOf(ctx, cls).get_str()},
                                            {"coordinates", cj}}
                                 .dump()
                          << "\n";
            } else {
                std::cout << "class: " << classPlain(cls) << "\n";
                std::cout << "rank: " << rankOf(ctx, cls) << "\n";
                std::cout << "coordinates:";
                for (auto& x : coords.coords) std::cout << " " << x;
                std::cout << "\n";
            }
            return 0;
        }
        if (ecl->parsed()) {
            GrContext ctx = makeCtx(o);
            BlockContext bc(ctx, w, h);
            Diagram l = Diagram::parse(sa), m = Diagram::parse(sb);
            EqKClass cls;
            bool certOk = true;
            if (sRoute == "gram") {
                cls = eClass(bc, l, m);
            } else if (sRoute == "pushp") {
                auto [c, cert] = eClassPushP(bc, l, m);
                cls = c;
                certOk = cert.ok;
            } else if (sRoute == "pushf") {
                auto [c, cert] = eClassPushF(bc, l, m);
                cls = c;
                certOk = cert.ok;
            } else {
                throw std::invalid_argument("unknown route: " + sRoute);
            }
            if (o.json)
                std::cout << nlohmann::json{{"route", sRoute},
                                            {"class", classJson(cls)},
                                            {"certificateOk", certOk}}
                                 .dump()
                          << "\n";
            else
                std::cout << classPlain(cls) << (certOk ? "" : "  [certificate FAILED]") << "\n";
            return certOk ? 0 : 3;
        }
        if (stair->parsed()) {
            GrContext ctx = makeCtx(o);
            StairComplex c;
            if (sKind == "u")
                c = staircaseU(ctx, Diagram::parse(sa));
            else if (sKind == "q")
                c = staircaseQ(ctx, Diagram::parse(sb));
            else if (sKind == "el")
                c = staircaseE(BlockContext(ctx, w, h), Diagram::parse(sa), Diagram::parse(sb),
                               StairVariant::L);
            else if (sKind == "em")
                c = staircaseE(BlockContext(ctx, w, h), Diagram::parse(sa), Diagram::parse(sb),
                               StairVariant::M);
            else
                throw std::invalid_argument("unknown staircase kind: " + sKind);
            bool exact = checkExactK(c);
            if (o.json) {
                nlohmann::json terms = nlohmann::json::array();
                for (auto& [label, cls] : c.terms)
                    terms.push_back({{"label", label}, {"class", classJson(cls)}});
                std::cout << nlohmann::json{{"terms", terms}, {"exactInK", exact}}.dump() << "\n";
            } else {
                for (auto& [label, cls] : c.terms)
                    std::cout << label << "  (rank " << rankOf(ctx, cls) << ")\n";
                std::cout << (exact ? "exact in K-theory\n" : "NOT exact in K-theory\n");
            }
            return exact ? 0 : 1;
        }
        if (blocks->parsed()) {
            GrContext ctx = makeCtx(o);
            if (!sPoint.empty()) {
                Block b = blockAt(ctx, parsePoint(sPoint));
                if (o.json) {
                    nlohmann::json prs = nlohmann::json::array();
                    for (auto& pr : b.pairs)
                        prs.push_back({{"lambda", pr.first.parts()}, {"mu", pr.second.parts()}});
                    std::cout << nlohmann::json{{"point", b.point.str()}, {"pairs", prs}}.dump()
                              << "\n";
                } else {
                    std::cout << "block at " << b.point.str() << ", size " << b.pairs.size()
                              << "\n";
                    for (auto& pr : b.pairs)
                        std::cout << "  (" << pr.first.str() << ", " << pr.second.str() << ")\n";
                }
                return 0;
            }
            auto path = validatePath(ctx, parsePathString(sPath));
            auto dec = decompositionOf(ctx, path);
            if (o.json) {
                nlohmann::json list = nlohmann::json::array();
                for (auto& [blk, tw] : dec)
                    list.push_back({{"point", blk.point.str()},
                                    {"twist", tw},
                                    {"size", blk.pairs.size()}});
                std::cout << nlohmann::json{{"blocks", list}}.dump() << "\n";
            } else {
                for (auto& [blk, tw] : dec)
                    std::cout << blk.point.str() << "  twist " << tw << "  size "
                              << blk.pairs.size() << "\n";
            }
            return 0;
        }
        if (paths->parsed()) {
            GrContext ctx = makeCtx(o);
            auto all = enumeratePaths(ctx);
            if (o.json) {
                nlohmann::json list = nlohmann::json::array();
                for (auto& p : all) list.push_back(p.str());
                std::cout << nlohmann::json{{"count", all.size()}, {"paths", list}}.dump() << "\n";
            } else {
                for (auto& p : all) std::cout << p.str() << "\n";
                std::cout << all.size() << " path(s)\n";
            }
            return 0;
        }
        if (vsod->parsed()) {
            GrContext ctx = makeCtx(o);
            auto ps = resolvePaths(ctx, sPath, allPaths);
            return emitReport(cmdVerifySOD(ctx, ps, o.jobs, parseMutation(sMut)), o.json);
        }
        if (vblk->parsed()) {
            GrContext ctx = makeCtx(o);
            return emitReport(cmdVerifyBlock(ctx, parsePoint(sPoint)), o.json);
        }
        if (vst->parsed()) {
            GrContext ctx = makeCtx(o);
            return emitReport(cmdVerifyStaircase(ctx, o.jobs, parseMutation(sMut)), o.json);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal assertion: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
