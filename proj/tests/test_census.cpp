#include <gtest/gtest.h>

#include <set>

#include "bc4/census.hpp"
#include "bc4/construct.hpp"
#include "support.hpp"

namespace bc4 {
namespace {

using testing::k4;
using testing::k4_minus;
using testing::loose_triangle;
using testing::single_edge;

// Independent good-path count straight from the edge list.
struct NaiveCensus {
    std::uint64_t total = 0, good = 0, max_pair = 0;
};

NaiveCensus naive_census(const Hypergraph& h) {
    const std::size_t n = h.vertex_count();
    auto has_triple = [&](Vertex a, Vertex b, Vertex c) {
        Triple t{a, b, c};
        std::sort(t.begin(), t.end());
        return std::find(h.edges().begin(), h.edges().end(), t) != h.edges().end();
    };
    auto adj = [&](Vertex a, Vertex b) {
        for (Vertex c = 0; c < n; ++c)
            if (c != a && c != b && has_triple(a, b, c)) return true;
        return false;
    };
    auto rare = [&](Vertex a, Vertex b, Vertex c, Vertex d) {
        if (!adj(a, b) || !adj(b, c) || !adj(c, d) || !adj(d, a)) return false;
        return !(has_triple(a, c, b) && has_triple(a, c, d)) && !(has_triple(b, d, a) && has_triple(b, d, c));
    };
    NaiveCensus out;
    std::map<std::pair<Vertex, Vertex>, std::uint64_t> per_pair;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex x = 0; x < n; ++x)
            for (Vertex y = x + 1; y < n; ++y) {
                if (x == u || y == u || !adj(x, u) || !adj(u, y)) continue;
                ++out.total;
                bool good = !has_triple(x, u, y);
                for (Vertex w = 0; good && w < n; ++w)
                    if (w != x && w != y && w != u && rare(x, u, y, w)) good = false;
                if (good) {
                    ++out.good;
                    out.max_pair = std::max(out.max_pair, ++per_pair[{x, y}]);
                }
            }
    return out;
}

TEST(RepresentativeEdges, Examples) {
    EXPECT_EQ(representative_edges(k4(), FourCycle{0, 1, 2, 3}).size(), 4u);
    EXPECT_EQ(representative_edges(k4_minus(), FourCycle{0, 1, 2, 3}).size(), 3u);
    EXPECT_EQ(representative_edges(loose_triangle(), FourCycle{1, 2, 3, 4}).size(), 1u);
    EXPECT_THROW(representative_edges(single_edge(), FourCycle{0, 1, 2, 0}), ArgumentError);
    EXPECT_THROW(representative_edges(loose_triangle(), FourCycle{1, 2, 4, 3}), ArgumentError);
}

TEST(IsRare, Examples) {
    EXPECT_FALSE(is_rare(k4_minus(), FourCycle{0, 1, 2, 3}));
    EXPECT_FALSE(is_rare(k4(), FourCycle{0, 1, 2, 3}));
    EXPECT_TRUE(is_rare(loose_triangle(), FourCycle{1, 2, 3, 4}));
    // the diagonal 1-3 is covered twice, but only by edges leaving the cycle
    const Hypergraph h(10, {{0, 1, 4}, {1, 2, 5}, {2, 3, 6}, {0, 3, 7}, {1, 3, 8}, {1, 3, 9}});
    EXPECT_TRUE(is_rare(h, FourCycle{0, 1, 2, 3}, DiagonalRule::Induced));
    EXPECT_FALSE(is_rare(h, FourCycle{0, 1, 2, 3}, DiagonalRule::AnyEdges));
}

TEST(IsGood3Path, Examples) {
    EXPECT_FALSE(is_good_3path(single_edge(), 0, 1, 2));
    EXPECT_FALSE(is_good_3path(k4_minus(), 1, 0, 2));
    EXPECT_TRUE(is_good_3path(k4_minus(), 1, 2, 3));
    EXPECT_FALSE(is_good_3path(loose_triangle(), 1, 2, 3));
}

TEST(Census, SingleEdge) {
    const auto r = census(single_edge());
    EXPECT_EQ(r.total_3paths, 3u);
    EXPECT_EQ(r.good_3paths, 0u);
    EXPECT_EQ(r.nongood_3paths, 3u);
    EXPECT_EQ(r.rare_4cycles, 0u);
    EXPECT_EQ(r.claim2, (ClaimCheck{0, 6, true}));
    EXPECT_EQ(r.claim3, (ClaimCheck{0, 6, true}));
    EXPECT_EQ(r.nongood, (ClaimCheck{3, 21, true}));
}

TEST(Census, K4Minus) {
    const auto r = census(k4_minus());
    EXPECT_EQ(r.total_3paths, 12u);
    EXPECT_EQ(r.good_3paths, 3u);
    EXPECT_EQ(r.nongood_3paths, 9u);
    EXPECT_EQ(r.rare_4cycles, 0u);
    EXPECT_EQ(r.four_cycles, 3u);
    EXPECT_EQ(r.claim1, (ClaimCheck{1, 2, true}));
    EXPECT_EQ(r.claim2, (ClaimCheck{0, 18, true}));
    EXPECT_EQ(r.claim3, (ClaimCheck{3, 12, true}));
    EXPECT_EQ(r.nongood, (ClaimCheck{9, 63, true}));
    EXPECT_TRUE(r.all_claims_pass());
}

TEST(Census, Empty) {
    const auto r = census(Hypergraph(5));
    EXPECT_EQ(r.total_3paths, 0u);
    EXPECT_EQ(r.claim2, (ClaimCheck{0, 0, true}));
    EXPECT_EQ(r.nongood, (ClaimCheck{0, 0, true}));
    EXPECT_TRUE(r.per_pair_good_counts.empty());
}

TEST(Census, LooseTriangleHasARareCycle) {
    const auto r = census(loose_triangle());
    EXPECT_GE(r.rare_4cycles, 1u);
    EXPECT_EQ(r.rare_4cycles, testing::naive_count_rare(loose_triangle()));
}

TEST(Census, FourCyclesAreListedOnce) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Hypergraph h = testing::random_hypergraph(7, 6 + seed % 8, seed);
        std::set<std::set<std::pair<Vertex, Vertex>>> seen;
        const auto recs = four_cycles(h);
        for (const auto& rec : recs) {
            std::set<std::pair<Vertex, Vertex>> es;
            for (int i = 0; i < 4; ++i) {
                Vertex a = rec.vertices[i], b = rec.vertices[(i + 1) % 4];
                es.insert({std::min(a, b), std::max(a, b)});
            }
            ASSERT_TRUE(seen.insert(es).second);
        }
        ASSERT_EQ(recs.size(), census(h).four_cycles);
    }
}

TEST(Census, AgreesWithNaiveCounts) {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        const Hypergraph h = testing::random_hypergraph(5 + seed % 4, 2 + seed % 10, seed);
        const auto r = census(h);
        const auto naive = naive_census(h);
        ASSERT_EQ(r.total_3paths, naive.total) << seed;
        ASSERT_EQ(r.good_3paths, naive.good) << seed;
        ASSERT_EQ(static_cast<std::uint64_t>(r.claim1.lhs), naive.max_pair) << seed;
        ASSERT_EQ(r.rare_4cycles, testing::naive_count_rare(h)) << seed;
        ASSERT_EQ(r.good_3paths + r.nongood_3paths, r.total_3paths);
    }
}

TEST(Census, AnyEdgesRuleIsStricter) {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        const Hypergraph h = testing::random_hypergraph(6 + seed % 4, 4 + seed % 14, seed + 77);
        const auto induced = census(h, DiagonalRule::Induced);
        const auto any = census(h, DiagonalRule::AnyEdges);
        ASSERT_LE(any.rare_4cycles, induced.rare_4cycles);
        ASSERT_GE(any.good_3paths, induced.good_3paths);
        ASSERT_EQ(any.four_cycles, induced.four_cycles);
    }
}

TEST(Census, ClaimsHoldOnBc4FreeInputs) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Hypergraph h = random_bc4free(5 + seed % 25, 10000, seed);
        const auto r = census(h);
        ASSERT_TRUE(r.all_claims_pass()) << "seed " << seed;
        ASSERT_EQ(r.cycles_with_four_representatives, 0u);
    }
    for (std::uint64_t q : {2, 3}) EXPECT_TRUE(census(lower_bound_construction(q)).all_claims_pass());
}

TEST(Census, ConvenienceWrappersMatch) {
    const Hypergraph h = random_bc4free(12, 100, 5);
    const auto r = census(h);
    EXPECT_EQ(check_claim1(h), r.claim1);
    EXPECT_EQ(check_claim2(h), r.claim2);
    EXPECT_EQ(check_claim3(h), r.claim3);
    EXPECT_EQ(check_nongood(h), r.nongood);
}

} // namespace
} // namespace bc4
