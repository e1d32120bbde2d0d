#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "hcolor/util.hpp"

namespace hcolor {

// Vertices are dense 0-based ints; a vertex set is a sorted list of ids.
using VertexSet = std::vector<int>;

// Finite simple undirected graph. Loops are tracked separately from the
// adjacency matrix and only pattern graphs ever carry them; host graphs
// passed to solvers must have an empty loop set.
class Graph {
public:
    Graph() : n_(0) {}
    explicit Graph(int n) : n_(n), adj_(n, std::vector<bool>(n, false)), loop_(n, false) {
        if (n < 0) fail_invalid("Graph: negative vertex count");
    }

    int n() const { return n_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && adj_[u][v];
    }

    bool has_loop(int v) const {
        check_vertex(v);
        return loop_[v];
    }

    bool has_any_loop() const {
        return std::find(loop_.begin(), loop_.end(), true) != loop_.end();
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) fail_invalid("Graph::add_edge: use add_loop for self-loops");
        adj_[u][v] = true;
        adj_[v][u] = true;
    }

    void add_loop(int v) {
        check_vertex(v);
        loop_[v] = true;
    }

    int degree(int u) const {
        check_vertex(u);
        int d = 0;
        for (int v = 0; v < n_; ++v)
            if (adj_[u][v]) ++d;
        return d;
    }

    VertexSet neighbors(int u) const {
        check_vertex(u);
        VertexSet out;
        for (int v = 0; v < n_; ++v)
            if (adj_[u][v]) out.push_back(v);
        return out;
    }

    int edge_count() const {
        int m = 0;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (adj_[u][v]) ++m;
        return m;
    }

    int loop_count() const {
        return static_cast<int>(std::count(loop_.begin(), loop_.end(), true));
    }

    // Adjacency including loops: used when matching against reflexive
    // patterns, where u maps next to itself legally.
    bool adjacent_or_loop(int u, int v) const {
        return u == v ? has_loop(u) : has_edge(u, v);
    }

    VertexSet all_vertices() const {
        VertexSet out(n_);
        std::iota(out.begin(), out.end(), 0);
        return out;
    }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && adj_ == other.adj_ && loop_ == other.loop_;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) fail_invalid("Graph: vertex id out of range");
    }

    int n_;
    std::vector<std::vector<bool>> adj_;
    std::vector<bool> loop_;
};

inline Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                              const VertexSet& loops = {}) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    for (int v : loops) g.add_loop(v);
    return g;
}

// ---------------------------------------------------------------------------
// Basic set operations.

inline VertexSet closed_neighborhood(const Graph& g, const VertexSet& xs) {
    std::vector<bool> in(g.n(), false);
    for (int x : xs) {
        in[x] = true;
        for (int v = 0; v < g.n(); ++v)
            if (g.has_edge(x, v)) in[v] = true;
    }
    VertexSet out;
    for (int v = 0; v < g.n(); ++v)
        if (in[v]) out.push_back(v);
    return out;
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool is_complete_to(const Graph& g, int w, const VertexSet& set) {
    for (int v : set)
        if (!g.has_edge(w, v)) return false;
    return true;
}

inline bool is_anticomplete_to(const Graph& g, int w, const VertexSet& set) {
    for (int v : set)
        if (g.has_edge(w, v)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Components / connectivity.

inline std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> result;
    std::vector<bool> seen(g.n(), false);
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        VertexSet comp;
        std::vector<int> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int v = 0; v < g.n(); ++v)
                if (g.has_edge(u, v) && !seen[v]) {
                    seen[v] = true;
                    stack.push_back(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        result.push_back(std::move(comp));
    }
    return result;
}

// Components of g restricted to `domain` (the rest of the graph is ignored).
inline std::vector<VertexSet> components_within(const Graph& g, const VertexSet& domain) {
    std::vector<bool> in(g.n(), false);
    for (int v : domain) in[v] = true;
    std::vector<VertexSet> result;
    std::vector<bool> seen(g.n(), false);
    for (int s : domain) {
        if (seen[s]) continue;
        VertexSet comp;
        std::vector<int> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int v = 0; v < g.n(); ++v)
                if (in[v] && g.has_edge(u, v) && !seen[v]) {
                    seen[v] = true;
                    stack.push_back(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        result.push_back(std::move(comp));
    }
    return result;
}

inline bool is_connected(const Graph& g) {
    return g.n() <= 1 || components(g).size() == 1;
}

// Components of the complement, restricted to `domain`.
inline std::vector<VertexSet> co_components_within(const Graph& g, const VertexSet& domain) {
    std::vector<VertexSet> result;
    std::vector<bool> seen(g.n(), false);
    for (int s : domain) {
        if (seen[s]) continue;
        VertexSet comp;
        std::vector<int> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int v : domain)
                if (v != u && !seen[v] && !g.has_edge(u, v)) {
                    seen[v] = true;
                    stack.push_back(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        result.push_back(std::move(comp));
    }
    return result;
}

// Induced subgraph together with the new-to-old vertex relabeling, so that
// solutions computed on the subgraph can be lifted back.
struct InducedSubgraph {
    Graph graph;
    VertexSet to_old;  // to_old[new_id] = old_id
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices) {
    VertexSet sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    Graph sub(static_cast<int>(sorted.size()));
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (g.has_loop(sorted[i])) sub.add_loop(static_cast<int>(i));
        for (std::size_t j = i + 1; j < sorted.size(); ++j)
            if (g.has_edge(sorted[i], sorted[j]))
                sub.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
    return {std::move(sub), std::move(sorted)};
}

inline Graph complement(const Graph& g) {
    Graph co(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v)) co.add_edge(u, v);
    return co;
}

// ---------------------------------------------------------------------------
// Induced-subgraph detection.
//
// Backtracking over injective maps pattern -> host. Pattern vertices are
// visited in an order where each vertex (after the first of its component)
// has an already-placed neighbor, which keeps the candidate lists short.
// Patterns here are the fixed forbidden graphs (<= 12 vertices), hosts are
// desk-scale, so the worst case is acceptable.

namespace detail {

inline std::vector<int> pattern_order(const Graph& f) {
    std::vector<int> order;
    std::vector<bool> placed(f.n(), false);
    for (int start = 0; start < f.n(); ++start) {
        if (placed[start]) continue;
        order.push_back(start);
        placed[start] = true;
        bool grew = true;
        while (grew) {
            grew = false;
            for (int u = 0; u < f.n(); ++u) {
                if (placed[u]) continue;
                for (int w : order)
                    if (f.has_edge(u, w)) {
                        order.push_back(u);
                        placed[u] = true;
                        grew = true;
                        break;
                    }
            }
        }
    }
    return order;
}

inline bool extend_induced(const Graph& g, const Graph& f, const std::vector<int>& order,
                           std::size_t pos, std::vector<int>& image, std::vector<bool>& used) {
    if (pos == order.size()) return true;
    int u = order[pos];
    for (int cand = 0; cand < g.n(); ++cand) {
        if (used[cand] || g.degree(cand) < f.degree(u)) continue;
        bool ok = true;
        for (std::size_t j = 0; j < pos && ok; ++j) {
            int w = order[j];
            ok = (f.has_edge(u, w) == g.has_edge(cand, image[w]));
        }
        if (!ok) continue;
        image[u] = cand;
        used[cand] = true;
        if (extend_induced(g, f, order, pos + 1, image, used)) return true;
        used[cand] = false;
    }
    return false;
}

}  // namespace detail

// Returns vertices A of g (in pattern-vertex order) with g[A] isomorphic to
// f, or nullopt. The pattern f must be loop-free.
inline std::optional<VertexSet> contains_induced(const Graph& g, const Graph& f) {
    if (f.has_any_loop()) fail_invalid("contains_induced: pattern must be loop-free");
    if (f.n() > g.n()) return std::nullopt;
    if (f.n() == 0) return VertexSet{};
    auto order = detail::pattern_order(f);
    std::vector<int> image(f.n(), -1);
    std::vector<bool> used(g.n(), false);
    if (!detail::extend_induced(g, f, order, 0, image, used)) return std::nullopt;
    return VertexSet(image.begin(), image.end());
}

// Brute-force isomorphism for small test graphs: equal order plus an induced
// embedding is an isomorphism.
inline bool isomorphic(const Graph& g, const Graph& h) {
    if (g.n() != h.n() || g.edge_count() != h.edge_count()) return false;
    if (g.loop_count() != h.loop_count()) return false;
    if (g.has_any_loop() || h.has_any_loop()) {
        // Reflexive patterns are tiny (<= 12 vertices); strip loops into
        // pendant markers is overkill, just check all label maps by
        // backtracking on the loop-free part and verifying loops.
        Graph gs(g.n()), hs(h.n());
        for (int u = 0; u < g.n(); ++u)
            for (int v = u + 1; v < g.n(); ++v) {
                if (g.has_edge(u, v)) gs.add_edge(u, v);
                if (h.has_edge(u, v)) hs.add_edge(u, v);
            }
        // Permutation search with loop compatibility folded in.
        std::vector<int> perm(g.n());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            bool ok = true;
            for (int u = 0; u < g.n() && ok; ++u) {
                if (g.has_loop(u) != h.has_loop(perm[u])) ok = false;
                for (int v = u + 1; v < g.n() && ok; ++v)
                    if (g.has_edge(u, v) != h.has_edge(perm[u], perm[v])) ok = false;
            }
            if (ok) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    }
    std::vector<int> gdeg, hdeg;
    for (int v = 0; v < g.n(); ++v) gdeg.push_back(g.degree(v));
    for (int v = 0; v < h.n(); ++v) hdeg.push_back(h.degree(v));
    std::sort(gdeg.begin(), gdeg.end());
    std::sort(hdeg.begin(), hdeg.end());
    if (gdeg != hdeg) return false;
    return contains_induced(g, h).has_value();
}

// ---------------------------------------------------------------------------
// Cliques.

namespace detail {

inline bool extend_clique(const Graph& g, int need, int from, VertexSet& clique) {
    if (need == 0) return true;
    for (int v = from; v < g.n(); ++v) {
        bool ok = true;
        for (int u : clique)
            if (!g.has_edge(u, v)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        clique.push_back(v);
        if (extend_clique(g, need - 1, v + 1, clique)) return true;
        clique.pop_back();
    }
    return false;
}

}  // namespace detail

inline std::optional<VertexSet> find_clique_of_size(const Graph& g, int size) {
    if (size == 0) return VertexSet{};
    if (size > g.n()) return std::nullopt;
    VertexSet clique;
    if (detail::extend_clique(g, size, 0, clique)) return clique;
    return std::nullopt;
}

// Exact clique number, computed by checking sizes 1, 2, 3, ... in turn.
inline int clique_number(const Graph& g) {
    int w = 0;
    while (find_clique_of_size(g, w + 1)) ++w;
    return w;
}

namespace detail {

inline void bron_kerbosch(const Graph& g, VertexSet& r, VertexSet p, VertexSet x,
                          std::vector<VertexSet>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    int pivot = !p.empty() ? p.front() : x.front();
    VertexSet candidates;
    for (int v : p)
        if (!g.has_edge(pivot, v)) candidates.push_back(v);
    for (int v : candidates) {
        VertexSet p2, x2;
        for (int u : p)
            if (g.has_edge(u, v)) p2.push_back(u);
        for (int u : x)
            if (g.has_edge(u, v)) x2.push_back(u);
        r.push_back(v);
        bron_kerbosch(g, r, std::move(p2), std::move(x2), out);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
}

}  // namespace detail

inline std::vector<VertexSet> maximal_cliques(const Graph& g) {
    std::vector<VertexSet> out;
    if (g.n() == 0) return out;
    VertexSet r;
    detail::bron_kerbosch(g, r, g.all_vertices(), {}, out);
    for (auto& c : out) std::sort(c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Named constructions.

inline Graph make_path(int t) {
    if (t < 1) fail_invalid("make_path: need t >= 1");
    Graph g(t);
    for (int i = 0; i + 1 < t; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph make_cycle(int t) {
    if (t < 3) fail_invalid("make_cycle: need t >= 3");
    Graph g(t);
    for (int i = 0; i < t; ++i) g.add_edge(i, (i + 1) % t);
    return g;
}

inline Graph make_complete(int t) {
    if (t < 1) fail_invalid("make_complete: need t >= 1");
    Graph g(t);
    for (int u = 0; u < t; ++u)
        for (int v = u + 1; v < t; ++v) g.add_edge(u, v);
    return g;
}

// Star K_{1,t} with every edge subdivided once: center 0, middles 1..t,
// leaves t+1..2t.
inline Graph make_subdivided_star(int t) {
    if (t < 1) fail_invalid("make_subdivided_star: need t >= 1");
    Graph g(2 * t + 1);
    for (int i = 1; i <= t; ++i) {
        g.add_edge(0, i);
        g.add_edge(i, t + i);
    }
    return g;
}

// Subdivided star with its leaves made pairwise adjacent; the t = 1 case is
// defined as P3.
inline Graph make_subdivided_star_clique(int t) {
    if (t < 1) fail_invalid("make_subdivided_star_clique: need t >= 1");
    if (t == 1) return make_path(3);
    Graph g = make_subdivided_star(t);
    for (int i = 1; i <= t; ++i)
        for (int j = i + 1; j <= t; ++j) g.add_edge(t + i, t + j);
    return g;
}

// Threshold half-graph: independent a_0..a_{k-1}, clique b_0..b_{k-1}
// (ids k..2k-1), a_i adjacent to b_j iff i <= j.
inline Graph make_half_graph(int k) {
    if (k < 1) fail_invalid("make_half_graph: need k >= 1");
    Graph g(2 * k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) g.add_edge(k + i, k + j);
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) g.add_edge(i, k + j);
    return g;
}

inline Graph make_bull() {
    // Triangle 0-1-2 with pendant horns 3-0 and 4-1.
    return graph_from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {3, 0}, {4, 1}});
}

// F plus a universal vertex (new id = |V(F)|).
inline Graph with_universal(const Graph& f) {
    Graph g(f.n() + 1);
    for (int u = 0; u < f.n(); ++u) {
        if (f.has_loop(u)) g.add_loop(u);
        for (int v = u + 1; v < f.n(); ++v)
            if (f.has_edge(u, v)) g.add_edge(u, v);
    }
    for (int u = 0; u < f.n(); ++u) g.add_edge(u, f.n());
    return g;
}

// F plus an isolated vertex x (id |V(F)|) and then a universal vertex y
// (id |V(F)|+1); y sees everything, x sees only y.
inline Graph with_universal_and_pendant(const Graph& f) {
    Graph g(f.n() + 2);
    for (int u = 0; u < f.n(); ++u) {
        if (f.has_loop(u)) g.add_loop(u);
        for (int v = u + 1; v < f.n(); ++v)
            if (f.has_edge(u, v)) g.add_edge(u, v);
    }
    int y = f.n() + 1;
    for (int u = 0; u < f.n() + 1; ++u) g.add_edge(u, y);
    return g;
}

// Union of k+1 cliques of size k (blocks of consecutive ids, block 0 first),
// with the first vertex of block i (i >= 1) joined to vertex i-1 of block 0.
// P7-free, yet no small closed neighborhood meets every maximum clique.
inline Graph make_clique_cluster(int k) {
    if (k < 1) fail_invalid("make_clique_cluster: need k >= 1");
    Graph g(k * (k + 1));
    for (int b = 0; b <= k; ++b)
        for (int u = 0; u < k; ++u)
            for (int v = u + 1; v < k; ++v) g.add_edge(b * k + u, b * k + v);
    for (int i = 1; i <= k; ++i) g.add_edge(i - 1, i * k);
    return g;
}

}  // namespace hcolor
