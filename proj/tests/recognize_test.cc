#include "hcolor/recognize.hpp"

#include <gtest/gtest.h>

namespace hcolor {
namespace {

// Brute-force split check: try every clique/independent bipartition.
bool brute_is_split(const Graph& g) {
    for (int mask = 0; mask < (1 << g.n()); ++mask) {
        bool ok = true;
        for (int u = 0; u < g.n() && ok; ++u)
            for (int v = u + 1; v < g.n() && ok; ++v) {
                bool both_clique = (mask >> u & 1) && (mask >> v & 1);
                bool both_indep = !(mask >> u & 1) && !(mask >> v & 1);
                if (both_clique && !g.has_edge(u, v)) ok = false;
                if (both_indep && g.has_edge(u, v)) ok = false;
            }
        if (ok) return true;
    }
    return false;
}

// Brute-force primality: scan all vertex subsets for a proper module.
bool brute_is_prime(const Graph& g) {
    for (int mask = 0; mask < (1 << g.n()); ++mask) {
        VertexSet b;
        for (int v = 0; v < g.n(); ++v)
            if (mask >> v & 1) b.push_back(v);
        if (static_cast<int>(b.size()) < 2 || static_cast<int>(b.size()) >= g.n()) continue;
        if (is_module(g, b)) return false;
    }
    return true;
}

TEST(Threshold, HalfGraphIsThreshold) {
    EXPECT_TRUE(is_threshold(make_half_graph(4)));
}

TEST(Prime, P4IsPrime) {
    EXPECT_TRUE(is_prime(make_path(4)));
    EXPECT_TRUE(brute_is_prime(make_path(4)));
}

TEST(Prime, C4IsNotPrime) {
    EXPECT_FALSE(is_prime(make_cycle(4)));
    EXPECT_TRUE(is_module(make_cycle(4), {0, 2}));
}

TEST(Prime, MatchesBruteForce) {
    Rng rng(4242);
    for (int i = 0; i < 60; ++i) {
        Graph g = random_graph(rng.next_int(1, 7), 0.5, rng);
        EXPECT_EQ(is_prime(g), brute_is_prime(g));
    }
}

TEST(Split, MatchesBruteForceOnAllSmallGraphs) {
    for (int n = 1; n <= 5; ++n) {
        int pairs = n * (n - 1) / 2;
        for (int mask = 0; mask < (1 << pairs); ++mask) {
            Graph g(n);
            int bit = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++bit)
                    if (mask >> bit & 1) g.add_edge(u, v);
            ASSERT_EQ(is_split(g), brute_is_split(g)) << "n=" << n << " mask=" << mask;
        }
    }
}

TEST(Split, MatchesBruteForceOnRandomGraphs) {
    Rng rng(90125);
    for (int i = 0; i < 80; ++i) {
        Graph g = random_graph(rng.next_int(6, 8), 0.4, rng);
        EXPECT_EQ(is_split(g), brute_is_split(g));
    }
}

TEST(Split, C5SatisfiesTheThreeExclusionsButIsNotSplit) {
    Graph c5 = make_cycle(5);
    Graph two_k2 = graph_from_edges(4, {{0, 1}, {2, 3}});
    EXPECT_FALSE(contains_induced(c5, make_path(5)).has_value());
    EXPECT_FALSE(contains_induced(c5, make_cycle(4)).has_value());
    EXPECT_FALSE(contains_induced(c5, two_k2).has_value());
    EXPECT_FALSE(is_split(c5));
}

TEST(Recognizers, PtFreeMatchesDetector) {
    Rng rng(555);
    for (int i = 0; i < 40; ++i) {
        Graph g = random_graph(rng.next_int(1, 9), 0.4, rng);
        for (int t = 4; t <= 7; ++t)
            EXPECT_EQ(is_pt_free(g, t), !contains_induced(g, make_path(t)).has_value());
    }
}

TEST(Sampling, P5FreeSamplesAreP5Free) {
    Rng rng(17);
    ClassSpec spec;
    spec.forbidden.push_back(make_path(5));
    for (int i = 0; i < 10; ++i) {
        Graph g = sample_in_class(spec, 8, 0.4, rng);
        EXPECT_TRUE(is_pt_free(g, 5));
    }
}

TEST(Sampling, CographsAreCographs) {
    Rng rng(18);
    ClassSpec spec;
    spec.build_cograph = true;
    for (int i = 0; i < 10; ++i) {
        Graph g = sample_in_class(spec, 10, 0.5, rng);
        EXPECT_TRUE(is_cograph(g));
    }
}

TEST(Sampling, IntersectionClassesHoldBothRecognizers) {
    Rng rng(19);
    ClassSpec spec;
    spec.forbidden.push_back(make_path(5));
    spec.forbidden.push_back(make_bull());
    for (int i = 0; i < 10; ++i) {
        Graph g = sample_in_class(spec, 8, 0.3, rng);
        EXPECT_TRUE(is_pt_free(g, 5));
        EXPECT_TRUE(is_bull_free(g));
    }
}

TEST(Sampling, BudgetExhaustionFailsLoudly) {
    Rng rng(20);
    ClassSpec spec;
    spec.forbidden.push_back(make_path(2));  // forbid any edge
    EXPECT_THROW(sample_in_class(spec, 9, 0.9, rng, /*budget=*/25), Error);
}

TEST(ModuleClosure, GrowsToWholeGraphOnPrime) {
    Graph p4 = make_path(4);
    EXPECT_EQ(module_closure(p4, {0, 1}).size(), 4u);
}

}  // namespace
}  // namespace hcolor
