#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "grex/littlewood.hpp"

using namespace grex;

namespace {

std::vector<Diagram> partitionsOf(long long total, int maxPart, int maxRows) {
    std::vector<Diagram> out;
    std::vector<int> cur;
    detail::enumeratePartitionsOf(total, maxPart, maxRows, cur,
                                  [&](const std::vector<int>& p) { out.push_back(Diagram(p)); });
    return out;
}

std::vector<Diagram> partitionsUpTo(int total, int maxPart, int maxRows) {
    std::vector<Diagram> out;
    for (int t = 0; t <= total; ++t)
        for (auto& d : partitionsOf(t, maxPart, maxRows)) out.push_back(d);
    return out;
}

}  // namespace

TEST_CASE("lrCoefficient worked examples") {
    CHECK(lrCoefficient(Diagram{1}, Diagram{1}, Diagram{1, 1}) == 1);
    CHECK(lrCoefficient(Diagram{1}, Diagram{1}, Diagram{2}) == 1);
    CHECK(lrCoefficient(Diagram{2, 1}, Diagram{2, 1}, Diagram{3, 2, 1}) == 2);
    CHECK(lrCoefficient(Diagram{2}, Diagram{1}, Diagram{2, 2}) == 0);
    CHECK(lrCoefficient(Diagram{}, Diagram{}, Diagram{}) == 1);
    CHECK(lrCoefficient(Diagram{3, 1}, Diagram{2, 1}, Diagram{4, 2, 1}) == 2);
}

TEST_CASE("lr symmetry on all triples with |gamma| <= 8") {
    auto gammas = partitionsUpTo(8, 8, 8);
    for (auto& gamma : gammas) {
        if (gamma.boxCount() == 0) continue;
        auto alphas = partitionsUpTo(int(gamma.boxCount()), gamma.part(0), int(gamma.rows()));
        for (auto& alpha : alphas) {
            if (!contains(gamma, alpha)) continue;
            long long rest = gamma.boxCount() - alpha.boxCount();
            for (auto& beta : partitionsOf(rest, gamma.part(0), int(gamma.rows())))
                CHECK(lrCoefficient(alpha, beta, gamma) == lrCoefficient(beta, alpha, gamma));
        }
    }
}

TEST_CASE("dimGL worked examples") {
    CHECK(dimGL(GLWeight(Diagram{1, 1}, 4)) == 6);
    CHECK(dimGL(GLWeight(Diagram{2, 1}, 2)) == 2);
    CHECK(dimGL(GLWeight(Diagram{}, 5)) == 1);
    CHECK(dimGL(GLWeight(Diagram{0, 0, -1}, 3)) == 3);
    // exterior powers against the binomial oracle
    for (int n = 1; n <= 8; ++n)
        for (int c = 0; c <= n; ++c) {
            mpz_class bin;
            mpz_bin_uiui(bin.get_mpz_t(), static_cast<unsigned long>(n),
                         static_cast<unsigned long>(c));
            CHECK(dimGL(GLWeight(Diagram(std::vector<int>(std::size_t(c), 1)), n)) == bin);
        }
    // twist invariance
    CHECK(dimGL(GLWeight(Diagram{5, 3, 1}, 3)) == dimGL(GLWeight(Diagram{3, 1, -1}, 3)));
}

TEST_CASE("dualWeight") {
    CHECK(dualWeight(GLWeight(Diagram{2, 1}, 2)).weight == Diagram{-1, -2});
    CHECK(dualWeight(GLWeight(Diagram{}, 2)).weight == Diagram{});
    for (auto& d : enumerateBox(BoxSpec(2, 2))) {
        GLWeight x(d, 2);
        CHECK(dualWeight(dualWeight(x)).weight == x.weight);
        CHECK(dimGL(dualWeight(x)) == dimGL(x));
    }
}

TEST_CASE("tensorDecompose worked examples") {
    WeightSum vv = tensorDecompose(GLWeight(Diagram{1}, 2), GLWeight(Diagram{1}, 2));
    CHECK(vv == WeightSum{{Diagram{2}, 1}, {Diagram{1, 1}, 1}});
    WeightSum prod = tensorDecompose(GLWeight(Diagram{2, 1}, 2), GLWeight(Diagram{1, 1}, 2));
    CHECK(prod == WeightSum{{Diagram{3, 2}, 1}});
    WeightSum adj = tensorDecompose(GLWeight(Diagram{1}, 2), GLWeight(Diagram{0, -1}, 2));
    CHECK(adj == WeightSum{{Diagram{1, -1}, 1}, {Diagram{}, 1}});
}

TEST_CASE("tensor Lemma bounds over the 3x3 box at rank 3") {
    auto box = enumerateBox(BoxSpec(3, 3));
    for (auto& l : box)
        for (auto& m : box) {
            // direct bounds: lambda_i + mu_k <= alpha_i <= lambda_1 + mu_i
            for (auto& [alpha, mult] : tensorDecompose(GLWeight(l, 3), GLWeight(m, 3))) {
                CHECK(mult > 0);
                for (std::size_t i = 0; i < 3; ++i) {
                    CHECK(alpha.part(i) >= l.part(i) + m.part(2));
                    CHECK(alpha.part(i) <= l.part(0) + m.part(i));
                }
            }
            // dual clause: nonnegative summands of lambda (x) mu^* sit inside lambda
            for (auto& [alpha, mult] :
                 tensorDecompose(GLWeight(l, 3), dualWeight(GLWeight(m, 3)))) {
                (void)mult;
                if (alpha.part(2) >= 0) CHECK(contains(l, alpha));
            }
        }
}

TEST_CASE("dimension conservation on random tensor products") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> rk(1, 4), part(-3, 4);
    for (int trial = 0; trial < 500; ++trial) {
        int r = rk(rng);
        auto randomWeight = [&] {
            std::vector<int> v(static_cast<std::size_t>(r));
            for (int& x : v) x = part(rng);
            std::sort(v.rbegin(), v.rend());
            return Diagram(std::move(v));
        };
        GLWeight a(randomWeight(), r), b(randomWeight(), r);
        mpz_class total = 0;
        for (auto& [g, m] : tensorDecompose(a, b)) total += long(m) * dimGL(GLWeight(g, r));
        CHECK(total == dimGL(a) * dimGL(b));
    }
}

TEST_CASE("skewExpand worked examples and LR consistency") {
    CHECK(skewExpand(Diagram{2, 1}, Diagram{1}) ==
          WeightSum{{Diagram{2}, 1}, {Diagram{1, 1}, 1}});
    CHECK(skewExpand(Diagram{2, 2}, Diagram{1}) == WeightSum{{Diagram{2, 1}, 1}});
    CHECK(skewExpand(Diagram{3, 2}, Diagram{}) == WeightSum{{Diagram{3, 2}, 1}});
    CHECK_THROWS_AS(skewExpand(Diagram{1}, Diagram{2}), std::invalid_argument);

    auto box = enumerateBox(BoxSpec(3, 3));
    for (auto& beta : box)
        for (auto& alpha : box) {
            if (!contains(beta, alpha)) continue;
            WeightSum s = skewExpand(beta, alpha);
            long long boxes = 0;
            for (auto& [gamma, m] : s) {
                CHECK(gamma.boxCount() == beta.boxCount() - alpha.boxCount());
                CHECK(m == lrCoefficient(alpha, gamma, beta));
                boxes += m;
            }
            (void)boxes;
        }
}
