#ifndef GREX_LITTLEWOOD_HPP
#define GREX_LITTLEWOOD_HPP

#include <gmpxx.h>

#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>
#include <utility>
#include <vector>

#include "grex/diagram.hpp"

namespace grex {

// Dominant weight of GL(rank).
struct GLWeight {
    Diagram weight;
    int rank = 0;

    GLWeight(Diagram w, int r) : weight(std::move(w)), rank(r) {
        if (int(weight.rows()) > rank)
            throw std::invalid_argument("GLWeight: more parts than rank");
    }

    friend bool operator==(const GLWeight&, const GLWeight&) = default;
};

// Multiset of same-rank weights.
using WeightSum = std::map<Diagram, long long>;

namespace detail {

// Idempotent concurrent cache.
template <class K, class V>
class Memo {
public:
    bool lookup(const K& key, V& out) const {
        std::shared_lock lk(mx_);
        auto it = map_.find(key);
        if (it == map_.end()) return false;
        out = it->second;
        return true;
    }
    void store(const K& key, const V& val) {
        std::unique_lock lk(mx_);
        map_.emplace(key, val);
    }
    template <class F>
    void forEach(F&& f) const {
        std::shared_lock lk(mx_);
        for (auto& [k, v] : map_) f(k, v);
    }

private:
    mutable std::shared_mutex mx_;
    std::map<K, V> map_;
};

inline Memo<std::tuple<Diagram, Diagram, Diagram>, long long>& lrMemo() {
    static Memo<std::tuple<Diagram, Diagram, Diagram>, long long> memo;
    return memo;
}

// Counts LR tableaux of shape gamma/alpha and content beta: semistandard
// filling whose reverse reading word (rows top to bottom, each row right
// to left) is a lattice word.
inline long long lrCountTableaux(const Diagram& alpha, const Diagram& beta, const Diagram& gamma) {
    std::size_t rows = gamma.rows();
    std::size_t nsym = beta.rows();
    std::vector<std::vector<int>> fill(rows);
    for (std::size_t r = 0; r < rows; ++r)
        fill[r].assign(std::size_t(gamma.part(r)), 0);  // 1-based symbols, 0 = empty
    std::vector<int> used(nsym + 1, 0);

    long long count = 0;
    // Cells in reverse reading order: row 0..rows-1, columns right to left.
    auto rec = [&](auto&& self, std::size_t r, int c) -> void {
        if (r == rows) {
            ++count;
            return;
        }
        int lo = alpha.part(r);
        if (c < lo) {
            self(self, r + 1, gamma.part(r + 1) - 1);
            return;
        }
        for (int s = 1; s <= int(nsym); ++s) {
            if (used[std::size_t(s)] >= beta.part(std::size_t(s - 1))) continue;
            // lattice word: after placing s, #s <= #(s-1)
            if (s > 1 && used[std::size_t(s)] + 1 > used[std::size_t(s - 1)]) continue;
            // row weakly increasing left to right: entry <= right neighbour
            if (c + 1 < gamma.part(r) && fill[r][std::size_t(c + 1)] != 0 &&
                s > fill[r][std::size_t(c + 1)])
                continue;
            // column strictly increasing: entry > the skew cell above
            // (cells of alpha above impose no constraint)
            if (r > 0 && c < gamma.part(r - 1) && c >= alpha.part(r - 1) &&
                s <= fill[r - 1][std::size_t(c)])
                continue;
            fill[r][std::size_t(c)] = s;
            ++used[std::size_t(s)];
            self(self, r, c - 1);
            --used[std::size_t(s)];
            fill[r][std::size_t(c)] = 0;
        }
    };

    if (rows == 0) return 1;
    rec(rec, 0, gamma.part(0) - 1);
    return count;
}

}  // namespace detail

// Littlewood-Richardson coefficient m^gamma_{alpha,beta}.
inline long long lrCoefficient(const Diagram& alpha, const Diagram& beta, const Diagram& gamma) {
    if (!alpha.nonNegative() || !beta.nonNegative() || !gamma.nonNegative())
        throw std::invalid_argument("lrCoefficient: negative part");
    if (gamma.boxCount() != alpha.boxCount() + beta.boxCount()) return 0;
    if (!contains(gamma, alpha) || !contains(gamma, beta)) return 0;
    long long res;
    auto key = std::make_tuple(alpha, beta, gamma);
    if (detail::lrMemo().lookup(key, res)) return res;
    res = detail::lrCountTableaux(alpha, beta, gamma);
    detail::lrMemo().store(key, res);
    return res;
}

// Weyl dimension formula for GL(rank).
inline mpz_class dimGL(const GLWeight& a) {
    std::vector<int> v = a.weight.padded(std::size_t(a.rank));
    mpz_class num = 1, den = 1;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            num *= int(j) - int(i) + v[i] - v[j];
            den *= int(j) - int(i);
        }
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

// Pad to rank, negate, reverse.
inline GLWeight dualWeight(const GLWeight& a) {
    std::vector<int> v = a.weight.padded(std::size_t(a.rank));
    std::vector<int> w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = -v[v.size() - 1 - i];
    return GLWeight(Diagram(std::move(w)), a.rank);
}

namespace detail {

inline void enumeratePartitionsOf(long long total, int maxPart, int maxRows,
                                  std::vector<int>& cur,
                                  const std::function<void(const std::vector<int>&)>& emit) {
    if (total == 0) {
        emit(cur);
        return;
    }
    if (maxRows == 0) return;
    int top = int(std::min<long long>(maxPart, total));
    for (int p = top; p >= 1; --p) {
        if (1LL * p * maxRows < total) break;
        cur.push_back(p);
        enumeratePartitionsOf(total - p, p, maxRows - 1, cur, emit);
        cur.pop_back();
    }
}

}  // namespace detail

// Full decomposition of Sigma^a (x) Sigma^b for GL(r).  Negative parts are
// reduced to the partition case by simultaneous determinant twists.
inline WeightSum tensorDecompose(const GLWeight& a, const GLWeight& b) {
    if (a.rank != b.rank)
        throw std::invalid_argument("tensorDecompose: rank mismatch");
    int r = a.rank;
    int ma = std::min(a.weight.part(std::size_t(r - 1)), 0);
    int mb = std::min(b.weight.part(std::size_t(r - 1)), 0);
    Diagram ap = twist(a.weight, -ma, std::size_t(r));
    Diagram bp = twist(b.weight, -mb, std::size_t(r));

    WeightSum out;
    long long total = ap.boxCount() + bp.boxCount();
    int widthBound = ap.part(0) + bp.part(0);
    std::vector<int> cur;
    detail::enumeratePartitionsOf(
        total, widthBound, r, cur, [&](const std::vector<int>& parts) {
            Diagram gamma(parts);
            long long m = lrCoefficient(ap, bp, gamma);
            if (m > 0) out[twist(gamma, ma + mb, std::size_t(r))] += m;
        });
    return out;
}

// Skew Schur expansion: multiset { gamma : m^beta_{alpha,gamma} }.
inline WeightSum skewExpand(const Diagram& beta, const Diagram& alpha) {
    if (!alpha.nonNegative() || !beta.nonNegative())
        throw std::invalid_argument("skewExpand: negative part");
    if (!contains(beta, alpha))
        throw std::invalid_argument("skewExpand: alpha not contained in beta");
    WeightSum out;
    long long total = beta.boxCount() - alpha.boxCount();
    std::vector<int> cur;
    detail::enumeratePartitionsOf(
        total, beta.part(0), int(beta.rows()), cur, [&](const std::vector<int>& parts) {
            Diagram gamma(parts);
            long long m = lrCoefficient(alpha, gamma, beta);
            if (m > 0) out[gamma] += m;
        });
    return out;
}

}  // namespace grex

#endif
