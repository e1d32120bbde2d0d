#include "hcolor/monitor.hpp"

#include <gtest/gtest.h>

#include "hcolor/recognize.hpp"

namespace hcolor {
namespace {

// All maximum-size cliques, by subset scan (test-only oracle).
std::vector<VertexSet> maximum_cliques(const Graph& g) {
    int w = clique_number(g);
    std::vector<VertexSet> out;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(pick.size()) == w) {
            out.push_back(pick);
            return;
        }
        for (int v = from; v < g.n(); ++v) {
            bool ok = true;
            for (int u : pick)
                if (!g.has_edge(u, v)) ok = false;
            if (!ok) continue;
            pick.push_back(v);
            self(self, v + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

bool intersects(const VertexSet& a, const VertexSet& b) {
    for (int v : a)
        if (std::find(b.begin(), b.end(), v) != b.end()) return true;
    return false;
}

TEST(IsMonitor, WholeVertexSetIsAlwaysAMonitor) {
    Graph g = make_cycle(6);
    EXPECT_TRUE(is_monitor(g, g.all_vertices()));
}

TEST(IsMonitor, ClosedNeighborhoodOfPathMidpoint) {
    Graph p4 = make_path(4);
    EXPECT_TRUE(is_monitor(p4, closed_neighborhood(p4, {1})));
}

TEST(IsMonitor, SingleVertexNeighborhoodFailsOnC6) {
    Graph c6 = make_cycle(6);
    EXPECT_FALSE(is_monitor(c6, closed_neighborhood(c6, {0})));
}

TEST(IsMonitor, RejectsDisconnectedGraphs) {
    EXPECT_THROW(is_monitor(Graph(3), {0}), Error);
}

TEST(FindMonitorBase, CompleteGraphNeedsOneVertex) {
    Graph k5 = make_complete(5);
    for (int anchor = 0; anchor < 5; ++anchor) {
        MonitorBase base = find_monitor_base(k5, anchor);
        EXPECT_EQ(base.base, VertexSet{anchor});
    }
}

TEST(FindMonitorBase, PathAnchoredAtEndpointNeedsTwo) {
    MonitorBase base = find_monitor_base(make_path(4), 0);
    EXPECT_EQ(base.base, (VertexSet{0, 1}));
    EXPECT_FALSE(is_monitor(make_path(4), closed_neighborhood(make_path(4), {0})));
}

TEST(FindMonitorBase, C6AnchoredTakesThreeConsecutive) {
    MonitorBase base = find_monitor_base(make_cycle(6), 0);
    EXPECT_EQ(base.base, (VertexSet{0, 1, 2}));
    EXPECT_TRUE(is_monitor(make_cycle(6), closed_neighborhood(make_cycle(6), base.base)));
}

TEST(FindMonitorBase, PaddingKeepsMonitorAndAdmissibleOrder) {
    Graph k5 = make_complete(5);
    MonitorBase base = find_monitor_base(k5, 2, /*pad_to_three=*/true);
    ASSERT_EQ(base.base.size(), 3u);
    EXPECT_EQ(base.base[0], 2);
    EXPECT_TRUE(is_monitor(k5, closed_neighborhood(k5, base.base)));
    for (std::size_t i = 1; i < base.base.size(); ++i) {
        bool earlier = false;
        for (std::size_t j = 0; j < i; ++j)
            if (k5.has_edge(base.base[i], base.base[j])) earlier = true;
        EXPECT_TRUE(earlier);
    }
}

TEST(FindMonitorBase, PaddingImpossibleOnTinyHosts) {
    EXPECT_THROW(find_monitor_base(make_complete(2), 0, /*pad_to_three=*/true), Error);
}

TEST(FindMonitorBase, SampledP6FreeGraphsAlwaysHaveBases) {
    Rng rng(2024);
    ClassSpec spec;
    spec.forbidden.push_back(make_path(6));
    spec.connected = true;
    for (int i = 0; i < 60; ++i) {
        Graph g = sample_in_class(spec, rng.next_int(2, 9), 0.4, rng);
        int omega = clique_number(g);
        auto cliques = maximum_cliques(g);
        for (int anchor = 0; anchor < g.n(); ++anchor) {
            MonitorBase base = find_monitor_base(g, anchor);
            ASSERT_LE(base.base.size(), 3u);
            VertexSet region = closed_neighborhood(g, base.base);
            EXPECT_TRUE(is_monitor(g, region));
            for (const auto& clique : cliques) EXPECT_TRUE(intersects(clique, region));
            if (g.edge_count() > 0) {
                VertexSet rest = set_difference(g.all_vertices(), region);
                EXPECT_LT(clique_number(induced_subgraph(g, rest).graph), omega);
            }
        }
    }
}

TEST(CliqueCluster, SmallBasesCannotMeetAllMaximumCliques) {
    for (int k = 2; k <= 4; ++k) {
        Graph g = make_clique_cluster(k);
        auto cliques = maximum_cliques(g);
        // No X with |X| <= k-1 has N[X] meeting every maximum clique.
        VertexSet pick;
        bool found_small = false;
        auto rec = [&](auto&& self, int from, int remaining) -> void {
            if (found_small) return;
            if (!pick.empty()) {
                VertexSet region = closed_neighborhood(g, pick);
                bool all = true;
                for (const auto& clique : cliques)
                    if (!intersects(clique, region)) {
                        all = false;
                        break;
                    }
                if (all) {
                    found_small = true;
                    return;
                }
            }
            if (remaining == 0) return;
            for (int v = from; v < g.n(); ++v) {
                pick.push_back(v);
                self(self, v + 1, remaining - 1);
                pick.pop_back();
            }
        };
        rec(rec, 0, k - 1);
        EXPECT_FALSE(found_small) << "k=" << k;

        // Size k suffices: anchor one vertex inside each satellite clique.
        VertexSet base;
        for (int i = 1; i <= k; ++i) base.push_back(i * k);
        VertexSet region = closed_neighborhood(g, base);
        for (const auto& clique : cliques) EXPECT_TRUE(intersects(clique, region));
    }
}

TEST(MonitorWitnesses, ReportsCompleteVertices) {
    Graph p4 = make_path(4);
    auto witnesses = monitor_witnesses(p4, closed_neighborhood(p4, {1}));
    ASSERT_EQ(witnesses.size(), 1u);
    EXPECT_EQ(witnesses[0].component, VertexSet{3});
    EXPECT_EQ(witnesses[0].witness, 2);
}

}  // namespace
}  // namespace hcolor
