#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "grex/pathblocks.hpp"

using namespace grex;

namespace {

long long binomialLL(int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("point parsing and printing") {
    auto pts = parsePathString("0,0;1,0.5;1.5,1;2,2");
    REQUIRE(pts.size() == 4);
    CHECK(pts[1] == HalfPoint{2, 1});
    CHECK(pts[2] == HalfPoint{3, 2});
    CHECK(pts[2].str() == "1.5,1");
    CHECK_THROWS_AS(parsePathString("0,0;1,0.3"), std::invalid_argument);
    CHECK_THROWS_AS(parsePathString("0;1"), std::invalid_argument);
}

TEST_CASE("blockAt worked examples") {
    GrContext g24(2, 4);
    CHECK(blockAt(g24, HalfPoint{2, 2}).pairs.size() == 4);   // (1,1)
    CHECK(blockAt(g24, HalfPoint{0, 0}).pairs.size() == 1);   // (0,0)
    CHECK(blockAt(g24, HalfPoint{2, 1}).pairs.size() == 2);   // (1, 1/2)
    CHECK_THROWS_AS(blockAt(g24, HalfPoint{5, 0}), std::invalid_argument);

    Block b = blockAt(g24, HalfPoint{2, 2});
    CHECK(b.lambdaBox.w == 1);
    CHECK(b.lambdaBox.h == 1);
    CHECK(b.muBox.w == 1);
    CHECK(b.muBox.h == 1);
}

TEST_CASE("validatePath") {
    GrContext g24(2, 4);
    CHECK(validatePath(g24, parsePathString("0,0;1,1;2,2")).length() == 2);
    CHECK(validatePath(g24, parsePathString("0,0;1,0.5;1.5,1;2,2")).length() == 3);
    CHECK_THROWS_AS(validatePath(g24, parsePathString("0,0;2,1;2,2")), std::invalid_argument);
    CHECK_THROWS_AS(validatePath(g24, parsePathString("0,0;1,1")), std::invalid_argument);
    CHECK_THROWS_AS(validatePath(g24, parsePathString("0,0;1,1;1,1;2,2")), std::invalid_argument);
    CHECK_THROWS_AS(validatePath(g24, parsePathString("0,0;0.5,0.5;1,1;2,2")),
                    std::invalid_argument);
}

TEST_CASE("enumeratePaths") {
    CHECK(enumeratePaths(GrContext(1, 2)).size() == 1);
    auto p24 = enumeratePaths(GrContext(2, 4));
    CHECK(p24.size() == 3);  // frozen regression snapshot of the DFS
    for (auto& p : p24) {
        CHECK(p.points.front() == HalfPoint{0, 0});
        CHECK(p.points.back() == HalfPoint{4, 4});
        validatePath(GrContext(2, 4), p.points);  // must not throw
    }
}

TEST_CASE("count identity for all paths, small Grassmannians") {
    for (auto [k, n] : {std::pair{2, 4}, std::pair{2, 5}, std::pair{3, 5}}) {
        GrContext ctx(k, n);
        for (auto& p : enumeratePaths(ctx)) {
            long long total = 0;
            for (auto& [blk, tw] : decompositionOf(ctx, p)) total += (long long)blk.pairs.size();
            CHECK(total == binomialLL(n, k));
        }
    }
}

TEST_CASE("decomposition sizes of named paths on Gr(2,4)") {
    GrContext g24(2, 4);
    auto sizes = [&](const std::string& s) {
        std::vector<std::size_t> out;
        for (auto& [blk, tw] : decompositionOf(g24, validatePath(g24, parsePathString(s))))
            out.push_back(blk.pairs.size());
        return out;
    };
    CHECK(sizes("0,0;1,1;2,2") == std::vector<std::size_t>{1, 4, 1});
    CHECK(sizes("0,0;1,0.5;1.5,1;2,2") == std::vector<std::size_t>{1, 2, 2, 1});
}

TEST_CASE("twist indices and generators") {
    GrContext g24(2, 4);
    auto dec = decompositionOf(g24, validatePath(g24, parsePathString("0,0;1,1;2,2")));
    REQUIRE(dec.size() == 3);
    for (std::size_t i = 0; i < dec.size(); ++i) CHECK(dec[i].second == int(i));
    TwistedIrred g = blockGenerator(g24, Diagram{1}, Diagram{1}, 2);
    CHECK(g.uWeight == Diagram{0, -1});
    CHECK(g.qWeight == Diagram{1});
    CHECK(g.twistO == 2);
}

TEST_CASE("block depends only on the integral parts") {
    GrContext g36(3, 6);
    // all points with the same floors/ceilings produce the same pair set
    Block a = blockAt(g36, HalfPoint{3, 2});   // (1.5, 1)
    Block b = blockAt(g36, HalfPoint{2, 2});   // (1, 1)
    Block c = blockAt(g36, HalfPoint{4, 2});   // (2, 1)
    std::set<std::pair<Diagram, Diagram>> sb(b.pairs.begin(), b.pairs.end());
    std::set<std::pair<Diagram, Diagram>> sc(c.pairs.begin(), c.pairs.end());
    for (auto& pr : a.pairs) {
        CHECK(sb.count(pr) == 1);
        CHECK(sc.count(pr) == 1);
    }
}
