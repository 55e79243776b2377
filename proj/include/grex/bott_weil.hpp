#ifndef GREX_BOTT_WEIL_HPP
#define GREX_BOTT_WEIL_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "grex/diagram.hpp"
#include "grex/littlewood.hpp"

namespace grex {

struct GrContext {
    int k = 0;
    int n = 0;

    GrContext(int k_, int n_) : k(k_), n(n_) {
        if (!(0 < k && k < n)) throw std::invalid_argument("GrContext: need 0 < k < n");
    }

    int q() const { return n - k; }         // rank of V/U
    int dim() const { return k * (n - k); }

    friend bool operator==(const GrContext&, const GrContext&) = default;
    friend auto operator<=>(const GrContext&, const GrContext&) = default;
};

// Result of the dominance reduction: either everything vanishes, or there
// is a single cohomology degree carrying one irreducible.
struct BBWResult {
    bool vanishing = true;
    int degree = 0;
    Diagram dominant;  // length = ambient rank when not vanishing

    friend bool operator==(const BBWResult&, const BBWResult&) = default;
};

namespace detail {

inline Memo<std::vector<int>, BBWResult>& bbwMemo() {
    static Memo<std::vector<int>, BBWResult> memo;
    return memo;
}

}  // namespace detail

// Input is the rho-shifted sequence, rho = (m, m-1, ..., 1) already added.
// Repeated entry -> vanishing; otherwise degree = inversion count and the
// dominant weight is the descending sort minus rho.
inline BBWResult bbwReduce(const std::vector<int>& seq) {
    BBWResult out;
    if (detail::bbwMemo().lookup(seq, out)) return out;
    int inv = 0;
    bool repeat = false;
    for (std::size_t i = 0; i < seq.size() && !repeat; ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j) {
            if (seq[i] == seq[j]) {
                repeat = true;
                break;
            }
            if (seq[i] < seq[j]) ++inv;
        }
    if (!repeat) {
        std::vector<int> sorted(seq);
        std::sort(sorted.rbegin(), sorted.rend());
        int m = int(seq.size());
        for (int i = 0; i < m; ++i) sorted[std::size_t(i)] -= m - i;
        out = BBWResult{false, inv, Diagram(std::move(sorted))};
    }
    detail::bbwMemo().store(seq, out);
    return out;
}

// H^bullet(Gr(k,n), (V/U)^mu (x) U^lambda).  Quotient block first:
// the sequence is (n+mu_1, ..., k+1+mu_{n-k}, k+lambda_1, ..., 1+lambda_k).
inline BBWResult cohomologyGr(const GrContext& ctx, const Diagram& mu, const Diagram& lambda) {
    if (int(mu.rows()) > ctx.q() || int(lambda.rows()) > ctx.k)
        throw std::invalid_argument("cohomologyGr: block size mismatch");
    std::vector<int> seq;
    seq.reserve(std::size_t(ctx.n));
    std::vector<int> m = mu.padded(std::size_t(ctx.q()));
    std::vector<int> l = lambda.padded(std::size_t(ctx.k));
    for (int i = 0; i < ctx.q(); ++i) seq.push_back(ctx.n - i + m[std::size_t(i)]);
    for (int i = 0; i < ctx.k; ++i) seq.push_back(ctx.k - i + l[std::size_t(i)]);
    return bbwReduce(seq);
}

// Relative pushforward along a forgetful map whose fiber merges two
// adjacent weight blocks into one bundle of rank m = sum of block ranks.
// Blocks are quotient-most first; local rho = (m, ..., 1).  A non-vanishing
// answer (d, nu) means R^d of the input irreducible is the irreducible of
// weight nu on the merged bundle.
inline BBWResult pushInner(const std::vector<std::pair<Diagram, int>>& blocks) {
    std::vector<int> seq;
    int m = 0;
    for (auto& [d, r] : blocks) m += r;
    int pos = 0;
    for (auto& [d, r] : blocks) {
        std::vector<int> v = d.padded(std::size_t(r));
        for (int i = 0; i < r; ++i, ++pos) seq.push_back(m - pos + v[std::size_t(i)]);
    }
    return bbwReduce(seq);
}

}  // namespace grex

#endif
