#pragma once

#include <vector>

#include "hcolor/model.hpp"

namespace hcolor {

// The 12-vertex reflexive pattern that makes list coloring NP-hard on split
// and cobipartite hosts. Color ids: a1..a3 = 0..2, b1..b3 = 3..5,
// c1..c3 = 6..8, d1..d3 = 9..11.
struct H0Pattern {
    PatternGraph pattern;

    static int a(int i) { return i; }
    static int b(int i) { return 3 + i; }
    static int c(int i) { return 6 + i; }
    static int d(int i) { return 9 + i; }
};

inline H0Pattern build_h0() {
    Graph g(12);
    // Both halves are reflexive cliques.
    for (int u = 0; u < 6; ++u) {
        g.add_loop(u);
        g.add_loop(6 + u);
        for (int v = u + 1; v < 6; ++v) {
            g.add_edge(u, v);
            g.add_edge(6 + u, 6 + v);
        }
    }
    for (int i = 0; i < 3; ++i) {
        g.add_edge(H0Pattern::a(i), H0Pattern::c(i));
        g.add_edge(H0Pattern::b(i), H0Pattern::c(i));
        g.add_edge(H0Pattern::d(i), H0Pattern::a(i));
        for (int j = 0; j < 3; ++j)
            if (j != i) g.add_edge(H0Pattern::d(i), H0Pattern::b(j));
    }
    return H0Pattern{make_pattern(std::move(g), /*reflexive=*/true)};
}

// A host graph with per-vertex color lists over H0.
struct ListInstance {
    Graph graph;
    std::vector<VertexSet> lists;
};

// Encoding of a 3-coloring instance as list H0-coloring on a split graph:
// x_i, y_i form a clique and carry the color choice; each w_i ties x_i to
// y_i; each z_{i,j} (one per edge, i < j) forces different choices across
// the edge. The independent part W u Z has all degrees exactly 2.
// Vertex layout: x_1..x_n, y_1..y_n, w_1..w_n, then z's in lexicographic
// (i, j) order.
inline ListInstance reduce_3col_to_split(const Graph& g) {
    int n = g.n();
    if (n < 1) fail_invalid("reduce_3col_to_split: need at least one vertex");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.has_edge(i, j)) edges.emplace_back(i, j);
    int m = static_cast<int>(edges.size());

    Graph out(3 * n + m);
    auto x = [&](int i) { return i; };
    auto y = [&](int i) { return n + i; };
    auto w = [&](int i) { return 2 * n + i; };
    auto z = [&](int e) { return 3 * n + e; };

    for (int u = 0; u < 2 * n; ++u)
        for (int v = u + 1; v < 2 * n; ++v) out.add_edge(u, v);
    for (int i = 0; i < n; ++i) {
        out.add_edge(w(i), x(i));
        out.add_edge(w(i), y(i));
    }
    for (int e = 0; e < m; ++e) {
        out.add_edge(z(e), x(edges[e].first));
        out.add_edge(z(e), y(edges[e].second));
    }

    std::vector<VertexSet> lists(out.n());
    for (int i = 0; i < n; ++i) {
        lists[x(i)] = {H0Pattern::a(0), H0Pattern::a(1), H0Pattern::a(2)};
        lists[y(i)] = {H0Pattern::b(0), H0Pattern::b(1), H0Pattern::b(2)};
        lists[w(i)] = {H0Pattern::c(0), H0Pattern::c(1), H0Pattern::c(2)};
    }
    for (int e = 0; e < m; ++e)
        lists[z(e)] = {H0Pattern::d(0), H0Pattern::d(1), H0Pattern::d(2)};
    return {std::move(out), std::move(lists)};
}

// Same reduction with W u Z turned into a clique as well; the lists of that
// side live in the reflexive clique C u D, so satisfiability is unchanged
// and the host becomes the complement of a bipartite graph.
inline ListInstance reduce_3col_to_cobipartite(const Graph& g) {
    ListInstance out = reduce_3col_to_split(g);
    int n = g.n();
    for (int u = 2 * n; u < out.graph.n(); ++u)
        for (int v = u + 1; v < out.graph.n(); ++v) out.graph.add_edge(u, v);
    return out;
}

}  // namespace hcolor
