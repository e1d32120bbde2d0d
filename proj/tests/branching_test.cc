#include "hcolor/branching.hpp"

#include <gtest/gtest.h>

#include "corpus.hpp"
#include "hcolor/oracle.hpp"

namespace hcolor {
namespace {

TEST(RamseyBound, KnownValues) {
    EXPECT_EQ(ramsey_bound(3, 2), 3);
    EXPECT_EQ(ramsey_bound(2, 2), 2);
    EXPECT_EQ(ramsey_bound(3, 3), 6);
    EXPECT_THROW(ramsey_bound(0, 2), Error);
    EXPECT_THROW(ramsey_bound(40, 40), Error);  // overflow guard
}

TEST(PartitionAround, TriangleInK4) {
    StarPartition sp = partition_around(make_complete(4), {0, 1, 2});
    EXPECT_EQ(sp.part(1), VertexSet{3});
    EXPECT_TRUE(sp.part(2).empty());
    EXPECT_TRUE(sp.part(3).empty());
    EXPECT_TRUE(sp.part(4).empty());
}

TEST(PartitionAround, StarCenterTakesAllLeaves) {
    // K_{1,5}: center 0, leaves 1..5; base = center plus two leaves.
    Graph star(6);
    for (int leaf = 1; leaf <= 5; ++leaf) star.add_edge(0, leaf);
    StarPartition sp = partition_around(star, {0, 1, 2});
    EXPECT_EQ(sp.part(1), (VertexSet{3, 4, 5}));
    EXPECT_TRUE(sp.part(4).empty());
}

TEST(PartitionAround, C6LeftoverLandsInLastPart) {
    StarPartition sp = partition_around(make_cycle(6), {0, 1, 2});
    EXPECT_EQ(sp.part(1), VertexSet{5});
    EXPECT_TRUE(sp.part(2).empty());
    EXPECT_EQ(sp.part(3), VertexSet{3});
    EXPECT_EQ(sp.part(4), VertexSet{4});
}

TEST(PartitionAround, InadmissibleOrderRejected) {
    EXPECT_THROW(partition_around(make_path(4), {0, 2, 3}), Error);
}

TEST(PartitionAround, StructuralInvariants) {
    Rng rng(321);
    ClassSpec connected;
    connected.connected = true;
    for (int i = 0; i < 20; ++i) {
        Graph g = sample_in_class(connected, rng.next_int(3, 9), 0.5, rng);
        MonitorBase base = find_monitor_base(g, std::nullopt, true);
        StarPartition sp = partition_around(g, base.base);
        int covered = static_cast<int>(sp.x.size());
        for (int part = 1; part <= 4; ++part) covered += static_cast<int>(sp.part(part).size());
        EXPECT_EQ(covered, g.n());
        for (std::size_t i_x = 0; i_x < sp.x.size(); ++i_x) {
            for (int v : sp.part(static_cast<int>(i_x) + 1))
                EXPECT_TRUE(g.has_edge(sp.x[i_x], v));
            for (int later = static_cast<int>(i_x) + 2; later <= 4; ++later)
                for (int v : sp.part(later)) EXPECT_FALSE(g.has_edge(sp.x[i_x], v));
        }
    }
}

// Unfiltered guess count against direct subset enumeration on a single-color
// pattern: guesses are exactly the subsets of N[X] meeting each part in
// fewer than Ramsey(s, t) vertices.
TEST(EnumerateGuesses, CountMatchesBruteForceSingleColor) {
    Graph g = make_cycle(6);
    StarPartition sp = partition_around(g, {0, 1, 2});
    PatternGraph h = make_pattern(make_complete(1));

    BranchOptions opts;
    opts.filter_consistent = false;
    long long streamed = enumerate_guesses(g, sp, h, 3, 2, std::nullopt, opts, [](const Guess&) {});

    VertexSet domain;
    for (int v = 0; v < g.n(); ++v)
        if (sp.part_of[v] <= 3) domain.push_back(v);
    long long cap = ramsey_bound(3, 2);
    long long direct = 0;
    for (int mask = 0; mask < (1 << domain.size()); ++mask) {
        int per_part[4] = {0, 0, 0, 0};
        for (std::size_t i = 0; i < domain.size(); ++i)
            if (mask >> i & 1) {
                int part = sp.part_of[domain[i]];
                if (part >= 1) ++per_part[part];
            }
        if (per_part[1] < cap && per_part[2] < cap && per_part[3] < cap) ++direct;
    }
    EXPECT_EQ(streamed, direct);
}

TEST(EnumerateGuesses, EmptyGuessPresentAndNoOverlaps) {
    Graph g = make_cycle(6);
    StarPartition sp = partition_around(g, {0, 1, 2});
    PatternGraph h = make_pattern(make_complete(2));
    BranchOptions opts;
    bool saw_empty = false;
    long long cap = ramsey_bound(3, 2);
    enumerate_guesses(g, sp, h, 3, 2, std::nullopt, opts, [&](const Guess& guess) {
        bool empty = true;
        for (int label : guess.label)
            if (label >= 0) empty = false;
        if (empty) saw_empty = true;
        // Labels give at most one color per vertex, so the per-color sets are
        // disjoint by construction; check the per-part cardinality bound.
        for (int c = 0; c < h.k(); ++c) {
            int per_part[4] = {0, 0, 0, 0};
            for (int v = 0; v < g.n(); ++v)
                if (guess.label[v] == c && sp.part_of[v] >= 1) ++per_part[sp.part_of[v]];
            EXPECT_LE(per_part[1], cap - 1);
            EXPECT_LE(per_part[2], cap - 1);
            EXPECT_LE(per_part[3], cap - 1);
        }
    });
    EXPECT_TRUE(saw_empty);
}

TEST(EnumerateGuesses, GuessCapFailsLoudly) {
    Graph g = make_cycle(6);
    StarPartition sp = partition_around(g, {0, 1, 2});
    PatternGraph h = make_pattern(make_complete(2));
    BranchOptions opts;
    opts.guess_cap = 3;
    EXPECT_THROW(enumerate_guesses(g, sp, h, 3, 2, std::nullopt, opts, [](const Guess&) {}),
                 Error);
}

TEST(DisallowedPairs, AnchoredGuessBlocksAnchorColorOnFirstPart) {
    Graph g = make_cycle(6);
    StarPartition sp = partition_around(g, {0, 1, 2});
    PatternGraph h = make_pattern(make_complete(2));
    Guess guess;
    guess.label.assign(g.n(), -1);
    guess.label[0] = 1;  // anchor x = 0 guessed with color y = 1
    auto bad = disallowed_pairs(g, sp, h, guess);
    for (int u : sp.part(1)) EXPECT_TRUE(bad[u][1]);
}

TEST(DisallowedPairs, OtherColorMembershipBlocks) {
    Graph g = make_cycle(6);
    StarPartition sp = partition_around(g, {0, 1, 2});
    PatternGraph h = make_pattern(make_complete(2));
    Guess guess;
    guess.label.assign(g.n(), -1);
    guess.label[5] = 0;  // 5 sits in R(0)
    auto bad = disallowed_pairs(g, sp, h, guess);
    EXPECT_TRUE(bad[5][1]);
}

TEST(DisallowedPairs, MissingWitnessNeighborBlocks) {
    // P5 0-1-2-3-4 with base {0,1,2}: part(3) = 3 via x3 = 2, part(4) = 4.
    Graph g = make_path(5);
    StarPartition sp = partition_around(g, {0, 1, 2});
    ASSERT_EQ(sp.part_of[3], 3);
    ASSERT_EQ(sp.part_of[4], 4);
    PatternGraph h = make_pattern(make_complete(2));
    Guess guess;
    guess.label.assign(g.n(), -1);
    // Vertex 3 is in A3 \ R(0); its neighbor 4 in a later part has no
    // neighbor inside A3 cap R(0), so (3, 0) is disallowed.
    auto bad = disallowed_pairs(g, sp, h, guess);
    EXPECT_TRUE(bad[3][0]);
    // Whereas guessing 3 itself with color 0 removes the condition.
    guess.label[3] = 0;
    bad = disallowed_pairs(g, sp, h, guess);
    EXPECT_FALSE(bad[3][0]);
}

TEST(DerivedRevenue, EmptyBlockSetIsIdentity) {
    RevenueTable rev(2, 2, 1.5);
    std::vector<std::vector<bool>> bad(2, std::vector<bool>(2, false));
    RevenueTable out = derived_revenue(rev, bad);
    EXPECT_EQ(out.value, rev.value);
}

TEST(DerivedRevenue, UnguessedBaseRowsGoNegative) {
    Graph g = make_cycle(6);
    StarPartition sp = partition_around(g, {0, 1, 2});
    PatternGraph h = make_pattern(make_complete(2));
    Guess guess;
    guess.label.assign(g.n(), -1);
    RevenueTable rev(g.n(), h.k(), 1.0);
    RevenueTable out = derived_revenue(rev, disallowed_pairs(g, sp, h, guess));
    for (int x : sp.x)
        for (int v = 0; v < h.k(); ++v) EXPECT_EQ(out.at(x, v), -1.0);
}

TEST(StripCrossEdges, KeepsOnlyWithinPartEdges) {
    Graph g = make_cycle(6);
    g.add_edge(3, 5);  // A3-A1 bridge in the {0,1,2} partition
    StarPartition sp = partition_around(g, {0, 1, 2});
    Graph stripped = strip_cross_edges(g, sp);
    for (int x : sp.x) EXPECT_EQ(stripped.degree(x), 0);
    EXPECT_FALSE(stripped.has_edge(3, 5));
    EXPECT_FALSE(stripped.has_edge(3, 4));
    EXPECT_FALSE(stripped.has_edge(4, 5));
}

TEST(StripCrossEdges, WithinPartEdgeSurvives) {
    // Star with two extra leaves joined: both leaves sit in A1.
    Graph g(6);
    for (int leaf = 1; leaf <= 5; ++leaf) g.add_edge(0, leaf);
    g.add_edge(4, 5);
    StarPartition sp = partition_around(g, {0, 1, 2});
    Graph stripped = strip_cross_edges(g, sp);
    EXPECT_TRUE(stripped.has_edge(4, 5));
    EXPECT_EQ(stripped.edge_count(), 1);
}

TEST(BranchFull, RequiresPositiveRevenueAndSize) {
    Instance tiny{make_complete(2), make_pattern(make_complete(2)), RevenueTable(2, 2, 1.0)};
    EXPECT_THROW(branch_full(tiny, 3, 2), Error);
    Instance negative{make_cycle(5), make_pattern(make_complete(2)), RevenueTable(5, 2, -1.0)};
    EXPECT_THROW(branch_full(negative, 3, 2), Error);
    Instance split{Graph(6), make_pattern(make_complete(2)), RevenueTable(6, 2, 1.0)};
    EXPECT_THROW(branch_full(split, 3, 2), Error);
}

TEST(BranchFull, SumIdentityAgainstOracleOnP5FreeCorpus) {
    Rng rng(860);
    auto opt = testing::connected_p5_free();
    opt.n_min = 5;
    opt.n_max = 8;
    opt.k_max = 2;
    for (int i = 0; i < 12; ++i) {
        Instance inst = testing::random_instance(rng, opt);
        if (!inst.rev.has_positive()) continue;
        auto [oracle_opt, oracle_phi] = oracle_solve(inst);

        double best = 0.0;
        bool first = true;
        PartialColoring best_phi;
        branch_full_stream(inst, 3, 2, BranchOptions{}, [&](const BranchPair& pair) {
            EXPECT_EQ(pair.inst1.pattern.k(), inst.pattern.k() - 1);
            auto [o1, phi1] = oracle_solve(pair.inst1);
            auto [o2, phi2] = oracle_solve(pair.inst2);
            if (first || o1 + o2 > best) {
                best = o1 + o2;
                best_phi = combine_branch_solutions(pair, inst.host.n(), phi1, phi2);
                first = false;
            }
        });
        ASSERT_FALSE(first);
        EXPECT_EQ(best, oracle_opt);
        EXPECT_TRUE(is_valid(inst, best_phi));
        EXPECT_EQ(revenue(inst, best_phi), best);
    }
}

TEST(BranchSimplified, MaxOverRevenuesMatchesOracleAndOmegaDrops) {
    Rng rng(861);
    auto opt = testing::connected_p5_free();
    opt.n_min = 5;
    opt.n_max = 8;
    opt.k_max = 2;
    for (int i = 0; i < 12; ++i) {
        Instance inst = testing::random_instance(rng, opt);
        auto [oracle_opt, oracle_phi] = oracle_solve(inst);

        auto [stripped, tables] = branch_simplified(inst, 3, 2);
        // X isolated, no cross-part edges, clique number strictly down.
        if (inst.host.edge_count() > 0)
            EXPECT_LT(clique_number(stripped), clique_number(inst.host));

        double best = 0.0;
        bool first = true;
        for (const RevenueTable& rev_prime : tables) {
            Instance child{stripped, inst.pattern, rev_prime};
            auto [o, phi] = oracle_solve(child);
            // Soundness: every child optimum is a solution of the original
            // instance with the same revenue.
            EXPECT_TRUE(is_valid(inst, phi));
            EXPECT_EQ(revenue(inst, phi), o);
            if (first || o > best) {
                best = o;
                first = false;
            }
        }
        ASSERT_FALSE(first);
        EXPECT_EQ(best, oracle_opt);
    }
}

}  // namespace
}  // namespace hcolor
