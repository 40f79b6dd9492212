#include <doctest.h>

#include "coreduce/monoid.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace coreduce;

namespace {

std::vector<Vec> sorted(std::vector<Vec> v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<Vec> random_weights(std::mt19937& rng, int n, int dim) {
    std::uniform_int_distribution<int> c(-4, 4);
    std::vector<Vec> w;
    while (static_cast<int>(w.size()) < n) {
        Vec v(dim);
        for (auto& x : v) x = c(rng);
        if (!is_zero(v)) w.push_back(v);
    }
    return w;
}

}  // namespace

TEST_CASE("hilbert basis of small torus weight lists") {
    auto hb = hilbert_basis({{4}, {-4}, {6}, {-6}});
    CHECK(sorted(hb.generators) == sorted({{1, 1, 0, 0}, {0, 0, 1, 1}, {3, 0, 0, 2}, {0, 3, 2, 0}}));
    CHECK(sorted(hb.generators) == oracle::minimal_relations(hb.weights, 6));
    CHECK(hilbert_basis({{5}, {-5}}).generators == std::vector<Vec>{{1, 1}});
    // alpha, beta, -alpha-beta in root_scaled coordinates of A2.
    auto tri = hilbert_basis({{3, 0}, {0, 3}, {-3, -3}});
    CHECK(tri.generators == std::vector<Vec>{{1, 1, 1}});
    CHECK(hilbert_basis({{1, 0}, {0, 1}}).generators.empty());
    CHECK_THROWS(hilbert_basis({{0}}));
}

TEST_CASE("torus verdicts") {
    CHECK(is_torus_coreduced({{3}, {-3}, {3}, {-3}, {0}}).coreduced);
    auto v = is_torus_coreduced({{4}, {-4}, {6}, {-6}});
    REQUIRE_FALSE(v.coreduced);
    CHECK(*v.violating == Vec{3, 0, 0, 2});
    CHECK(is_relation(v.weights, *v.violating));
    CHECK(is_torus_coreduced({}).coreduced);
    // A repeated weight does not change the verdict.
    auto dup = is_torus_coreduced({{1}, {1}, {-2}});
    REQUIRE_FALSE(dup.coreduced);
    CHECK(*dup.violating == Vec{2, 0, 1});
}

TEST_CASE("completion agrees with exhaustive enumeration on random inputs") {
    std::mt19937 rng(12345);
    int certified = 0;
    for (int trial = 0; trial < 150; ++trial) {
        int n = 2 + trial % 5;
        int dim = 1 + trial % 2;
        auto w = random_weights(rng, n, dim);
        auto hb = hilbert_basis(w);
        Int bound = std::max<Int>(10, oracle::degree_bound(w));
        bool full = bound <= 22;
        if (!full) bound = 10;
        std::vector<Vec> low;
        bool all_low = true;
        for (const auto& g : hb.generators) {
            Int deg = 0;
            for (Int x : g) deg += x;
            if (deg <= bound) low.push_back(g);
            else all_low = false;
        }
        CAPTURE(trial);
        CHECK(sorted(low) == oracle::minimal_relations(w, bound));
        if (full) {
            CHECK(all_low);
            ++certified;
        }
        for (const auto& g : hb.generators) {
            CHECK(is_relation(w, g));
            std::vector<Vec> others;
            for (const auto& h : hb.generators)
                if (h != g) others.push_back(h);
            CHECK_FALSE(oracle::in_monoid(others, g));
        }
    }
    CHECK(certified > 100);
}

TEST_CASE("torus verdict invariant under permutation and negation") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 60; ++trial) {
        auto w = random_weights(rng, 3 + trial % 4, 1 + trial % 2);
        bool base = is_torus_coreduced(w).coreduced;
        auto p = w;
        std::shuffle(p.begin(), p.end(), rng);
        CHECK(is_torus_coreduced(p).coreduced == base);
        std::vector<Vec> nw;
        for (const auto& x : w) nw.push_back(neg(x));
        CHECK(is_torus_coreduced(nw).coreduced == base);
        // Verdict matches the full basis.
        auto hb = hilbert_basis(w);
        bool big = false;
        for (const auto& g : hb.generators)
            for (Int c : g)
                if (c >= 2) big = true;
        CHECK(base == !big);
    }
}

TEST_CASE("bounded sums") {
    std::vector<Vec> w{{1, 0}, {0, 1}, {-1, -1}};
    auto r = exists_sum(w, {2, 1}, 3, SumMode::exact_count);
    REQUIRE(r.feasible);
    CHECK(r.counts == Vec{2, 1, 0});
    CHECK_FALSE(exists_sum(w, {2, 1}, 2, SumMode::exact_count).feasible);
    CHECK(exists_sum(w, {0, 0}, 0, SumMode::exact_count).feasible);
    CHECK(exists_sum(w, {0, 0}, 3, SumMode::exact_count).feasible);
    CHECK_FALSE(exists_sum(w, {1, 0}, 2, SumMode::exact_count).feasible);
    CHECK(exists_sum(w, {1, 0}, 2, SumMode::at_most).feasible);
    CHECK_THROWS_AS(exists_sum({{1}, {2}, {3}}, {1000}, 1000, SumMode::exact_count, 50), LimitExceeded);

    std::mt19937 rng(99);
    for (int trial = 0; trial < 80; ++trial) {
        auto ws = random_weights(rng, 3, 2);
        Vec t{static_cast<Int>(trial % 5) - 2, static_cast<Int>(trial % 3) - 1};
        for (Int d = 0; d <= 4; ++d) {
            auto e = exists_sum(ws, t, d, SumMode::exact_count);
            if (e.feasible) {
                CHECK(exists_sum(ws, t, d, SumMode::at_most).feasible);
                Vec s(2, 0);
                Int cnt = 0;
                for (std::size_t i = 0; i < ws.size(); ++i) {
                    s = add(s, scale(ws[i], e.counts[i]));
                    cnt += e.counts[i];
                }
                CHECK(s == t);
                CHECK(cnt == d);
            }
        }
    }
    auto b = exists_sum_blocks({{{1}, {2}}, {{10}, {20}}}, {21}, 100);
    REQUIRE(b.feasible);
    CHECK(b.counts == Vec{1, 0, 0, 1});
    CHECK_FALSE(exists_sum_blocks({{{1}, {2}}, {{10}, {20}}}, {13}, 100).feasible);
}
