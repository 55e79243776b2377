#ifndef GREX_PATHBLOCKS_HPP
#define GREX_PATHBLOCKS_HPP

#include <set>
#include <string>
#include <vector>

#include "grex/diagram.hpp"
#include "grex/homcalc.hpp"

namespace grex {

// Point with half-integer coordinates, stored doubled.  Crossing points
// carry at least one integer coordinate.
struct HalfPoint {
    int x2 = 0;
    int y2 = 0;

    friend bool operator==(const HalfPoint&, const HalfPoint&) = default;
    friend auto operator<=>(const HalfPoint&, const HalfPoint&) = default;

    int floorX() const { return x2 >= 0 ? x2 / 2 : -((-x2 + 1) / 2); }
    int ceilX() const { return (x2 + 1) / 2; }
    int floorY() const { return y2 / 2; }
    int ceilY() const { return (y2 + 1) / 2; }
    bool integral() const { return x2 % 2 == 0 && y2 % 2 == 0; }

    std::string str() const {
        auto coord = [](int v2) {
            std::string s = std::to_string(v2 / 2);
            if (v2 % 2) s = std::to_string(v2 / 2) + ".5";
            return s;
        };
        return coord(x2) + "," + coord(y2);
    }
};

// Bl_p = Y_{n-k-x, y} x Y_{k-y, x} with floors applied to the box sizes.
struct Block {
    HalfPoint point;
    BoxSpec lambdaBox;  // width floor(n-k-x), height floor(y)
    BoxSpec muBox;      // width floor(k-y), height floor(x)
    std::vector<std::pair<Diagram, Diagram>> pairs;
};

inline bool insideRectangle(const GrContext& ctx, const HalfPoint& p) {
    return 0 <= p.x2 && p.x2 <= 2 * ctx.q() && 0 <= p.y2 && p.y2 <= 2 * ctx.k;
}

inline Block blockAt(const GrContext& ctx, const HalfPoint& p) {
    if (!insideRectangle(ctx, p))
        throw std::invalid_argument("blockAt: point outside rectangle");
    BoxSpec lBox(ctx.q() - p.ceilX(), p.floorY());
    BoxSpec mBox(ctx.k - p.ceilY(), p.floorX());
    Block b{p, lBox, mBox, {}};
    auto ls = enumerateBox(lBox);
    auto ms = enumerateBox(mBox);
    b.pairs.reserve(ls.size() * ms.size());
    for (auto& l : ls)
        for (auto& m : ms) b.pairs.push_back({l, m});
    return b;
}

struct CanonicalPath {
    std::vector<HalfPoint> points;

    std::size_t length() const { return points.size() - 1; }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (i) s += ';';
            s += points[i].str();
        }
        return s;
    }

    friend bool operator==(const CanonicalPath&, const CanonicalPath&) = default;
};

// Checks p_0 = (0,0), p_l = (n-k,k), strict increase in both coordinates,
// and that no grid line is skipped: the open interval between consecutive
// coordinates contains no integer.
inline CanonicalPath validatePath(const GrContext& ctx, const std::vector<HalfPoint>& pts) {
    if (pts.empty() || pts.front() != HalfPoint{0, 0} ||
        pts.back() != HalfPoint{2 * ctx.q(), 2 * ctx.k})
        throw std::invalid_argument("validatePath: endpoint mismatch");
    auto noIntegerInside = [](int a2, int b2) {
        // even value strictly between a2 and b2 <-> skipped grid line
        for (int v = a2 + 1; v < b2; ++v)
            if (v % 2 == 0) return false;
        return true;
    };
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (!insideRectangle(ctx, pts[i]))
            throw std::invalid_argument("validatePath: point outside rectangle");
        if (pts[i].x2 % 2 != 0 && pts[i].y2 % 2 != 0)
            throw std::invalid_argument("validatePath: point with no integer coordinate");
        if (i == 0) continue;
        if (pts[i].x2 <= pts[i - 1].x2 || pts[i].y2 <= pts[i - 1].y2)
            throw std::invalid_argument("validatePath: coordinates not strictly increasing");
        if (!noIntegerInside(pts[i - 1].x2, pts[i].x2))
            throw std::invalid_argument("validatePath: skipped vertical grid line");
        if (!noIntegerInside(pts[i - 1].y2, pts[i].y2))
            throw std::invalid_argument("validatePath: skipped horizontal grid line");
    }
    return CanonicalPath{pts};
}

// Exhaustive DFS over feasible crossing points, deduplicated by the
// induced block sequence.
inline std::vector<CanonicalPath> enumeratePaths(const GrContext& ctx) {
    int X = 2 * ctx.q(), Y = 2 * ctx.k;
    std::vector<CanonicalPath> out;
    std::set<std::vector<HalfPoint>> seenBlocks;
    std::vector<HalfPoint> cur{{0, 0}};
    auto rec = [&](auto&& self) -> void {
        HalfPoint p = cur.back();
        if (p.x2 == X && p.y2 == Y) {
            if (seenBlocks.insert(cur).second) out.push_back(CanonicalPath{cur});
            return;
        }
        int bx = std::min(X, p.x2 % 2 == 0 ? p.x2 + 2 : p.x2 + 1);
        int by = std::min(Y, p.y2 % 2 == 0 ? p.y2 + 2 : p.y2 + 1);
        for (int x2 = p.x2 + 1; x2 <= bx; ++x2)
            for (int y2 = p.y2 + 1; y2 <= by; ++y2) {
                if (x2 % 2 != 0 && y2 % 2 != 0) continue;
                bool endPoint = (x2 == X && y2 == Y);
                if ((x2 == X || y2 == Y) && !endPoint) continue;  // dead end
                cur.push_back({x2, y2});
                self(self);
                cur.pop_back();
            }
    };
    rec(rec);
    return out;
}

// Blocks along the path, paired with the twist index i of B_{p_i}(i).
inline std::vector<std::pair<Block, int>> decompositionOf(const GrContext& ctx,
                                                          const CanonicalPath& path) {
    std::vector<std::pair<Block, int>> out;
    out.reserve(path.points.size());
    for (std::size_t i = 0; i < path.points.size(); ++i)
        out.push_back({blockAt(ctx, path.points[i]), int(i)});
    return out;
}

// Generator object of B_p(i) for a block pair: Sigma^lambda U^* (x)
// Sigma^mu (V/U) twisted by O(i).
inline TwistedIrred blockGenerator(const GrContext& ctx, const Diagram& lambda, const Diagram& mu,
                                   int twistIndex) {
    return TwistedIrred{dualWeight(GLWeight(lambda, ctx.k)).weight, mu, twistIndex};
}

inline std::vector<HalfPoint> parsePathString(const std::string& s) {
    std::vector<HalfPoint> pts;
    std::istringstream is(s);
    std::string tok;
    auto parseCoord = [](const std::string& c) {
        std::size_t dot = c.find('.');
        if (dot == std::string::npos) return 2 * std::stoi(c);
        std::string frac = c.substr(dot + 1);
        if (frac != "5") throw std::invalid_argument("path coordinate must be integer or .5");
        return 2 * std::stoi(c.substr(0, dot)) + 1;
    };
    while (std::getline(is, tok, ';')) {
        std::size_t comma = tok.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("path point must be x,y");
        pts.push_back({parseCoord(tok.substr(0, comma)), parseCoord(tok.substr(comma + 1))});
    }
    return pts;
}

}  // namespace grex

#endif
