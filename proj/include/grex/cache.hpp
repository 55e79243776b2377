#ifndef GREX_CACHE_HPP
#define GREX_CACHE_HPP

#include <fstream>
#include <iostream>
#include <string>

#include "json.hpp"

#include "grex/bott_weil.hpp"

namespace grex {

// Optional persistence for the two innermost memo tables.  JSON lines: a
// versioned header record followed by one {"kind","key","val"} record per
// entry.  The cache is a pure accelerator: a missing or corrupt file only
// produces a warning and results never depend on its presence.

inline constexpr const char* kCacheFormat = "grex-cache";
inline constexpr int kCacheVersion = 1;

inline bool loadCache(const std::string& path) {
    std::ifstream in(path);
    if (!in) return false;
    std::string line;
    if (!std::getline(in, line)) return false;
    try {
        auto header = nlohmann::json::parse(line);
        if (header.at("format") != kCacheFormat || header.at("version") != kCacheVersion) {
            std::cerr << "warning: cache header mismatch, ignoring " << path << "\n";
            return false;
        }
    } catch (const nlohmann::json::exception&) {
        std::cerr << "warning: corrupt cache header, ignoring " << path << "\n";
        return false;
    }
    long long loaded = 0, skipped = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            auto rec = nlohmann::json::parse(line);
            std::string kind = rec.at("kind");
            if (kind == "lr") {
                auto key = rec.at("key");
                Diagram a(key.at(0).get<std::vector<int>>());
                Diagram b(key.at(1).get<std::vector<int>>());
                Diagram c(key.at(2).get<std::vector<int>>());
                detail::lrMemo().store({a, b, c}, rec.at("val").get<long long>());
            } else if (kind == "bbw") {
                auto seq = rec.at("key").get<std::vector<int>>();
                auto val = rec.at("val");
                BBWResult r;
                r.vanishing = val.at("vanishing").get<bool>();
                if (!r.vanishing) {
                    r.degree = val.at("degree").get<int>();
                    r.dominant = Diagram(val.at("dominant").get<std::vector<int>>());
                }
                detail::bbwMemo().store(seq, r);
            } else {
                ++skipped;
                continue;
            }
            ++loaded;
        } catch (const std::exception&) {
            ++skipped;
        }
    }
    if (skipped > 0)
        std::cerr << "warning: skipped " << skipped << " corrupt cache record(s) in " << path
                  << "\n";
    return loaded > 0;
}

inline bool saveCache(const std::string& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
        std::cerr << "warning: cannot write cache file " << path << "\n";
        return false;
    }
    out << nlohmann::json{{"format", kCacheFormat}, {"version", kCacheVersion}}.dump() << "\n";
    detail::lrMemo().forEach([&](const auto& key, long long val) {
        out << nlohmann::json{{"kind", "lr"},
                              {"key",
                               {std::get<0>(key).parts(), std::get<1>(key).parts(),
                                std::get<2>(key).parts()}},
                              {"val", val}}
                   .dump()
            << "\n";
    });
    detail::bbwMemo().forEach([&](const std::vector<int>& key, const BBWResult& val) {
        nlohmann::json v{{"vanishing", val.vanishing}};
        if (!val.vanishing) {
            v["degree"] = val.degree;
            v["dominant"] = val.dominant.parts();
        }
        out << nlohmann::json{{"kind", "bbw"}, {"key", key}, {"val", v}}.dump() << "\n";
    });
    return bool(out);
}

}  // namespace grex

#endif
