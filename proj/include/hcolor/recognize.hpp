#pragma once

#include <string>
#include <vector>

#include "hcolor/graph.hpp"
#include "hcolor/util.hpp"

namespace hcolor {

// ---------------------------------------------------------------------------
// Modules (needed for primality; the full decomposition lives elsewhere).

inline bool is_module(const Graph& g, const VertexSet& b) {
    std::vector<bool> in(g.n(), false);
    for (int v : b) in[v] = true;
    for (int u = 0; u < g.n(); ++u) {
        if (in[u]) continue;
        int seen = 0, adjacent = 0;
        for (int v : b) {
            ++seen;
            if (g.has_edge(u, v)) ++adjacent;
        }
        if (adjacent != 0 && adjacent != seen) return false;
    }
    return true;
}

// Smallest module containing the seed set: grow by splitters until stable.
inline VertexSet module_closure(const Graph& g, const VertexSet& seed) {
    std::vector<bool> in(g.n(), false);
    for (int v : seed) in[v] = true;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int u = 0; u < g.n(); ++u) {
            if (in[u]) continue;
            bool some = false, all = true;
            for (int v = 0; v < g.n(); ++v) {
                if (!in[v]) continue;
                if (g.has_edge(u, v))
                    some = true;
                else
                    all = false;
            }
            if (some && !all) {
                in[u] = true;
                grew = true;
            }
        }
    }
    VertexSet out;
    for (int v = 0; v < g.n(); ++v)
        if (in[v]) out.push_back(v);
    return out;
}

// A graph is prime if it has no proper module (2 <= |B| < n). Every proper
// module contains the closure of one of its pairs, so checking pair closures
// is enough.
inline bool is_prime(const Graph& g) {
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (static_cast<int>(module_closure(g, {u, v}).size()) < g.n()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Hereditary-class recognizers.

inline bool is_pt_free(const Graph& g, int t) {
    return !contains_induced(g, make_path(t)).has_value();
}

inline bool is_st_free(const Graph& g, int t) {
    return !contains_induced(g, make_subdivided_star(t)).has_value();
}

inline bool is_lt_free(const Graph& g, int t) {
    return !contains_induced(g, make_subdivided_star_clique(t)).has_value();
}

inline bool is_c5_free(const Graph& g) {
    return !contains_induced(g, make_cycle(5)).has_value();
}

inline bool is_bull_free(const Graph& g) {
    return !contains_induced(g, make_bull()).has_value();
}

inline bool is_cograph(const Graph& g) {
    return is_pt_free(g, 4);
}

inline bool is_threshold(const Graph& g) {
    Graph two_k2 = graph_from_edges(4, {{0, 1}, {2, 3}});
    return !contains_induced(g, two_k2).has_value() &&
           !contains_induced(g, make_cycle(4)).has_value() &&
           !contains_induced(g, make_path(4)).has_value();
}

// Split recognition via the partition definition. In a split graph, sorting
// by degree descending makes some prefix a clique with the rest independent
// (Hammer-Simeone), so trying every prefix length decides membership.
inline bool is_split(const Graph& g) {
    std::vector<int> order(g.n());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    for (int k = 0; k <= g.n(); ++k) {
        bool ok = true;
        for (int i = 0; i < k && ok; ++i)
            for (int j = i + 1; j < k && ok; ++j)
                if (!g.has_edge(order[i], order[j])) ok = false;
        for (int i = k; i < g.n() && ok; ++i)
            for (int j = i + 1; j < g.n() && ok; ++j)
                if (g.has_edge(order[i], order[j])) ok = false;
        if (ok) return true;
    }
    return false;
}

inline bool is_cobipartite(const Graph& g) {
    // Complement 2-colorable.
    Graph co = complement(g);
    std::vector<int> color(g.n(), -1);
    for (int s = 0; s < g.n(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < g.n(); ++v) {
                if (!co.has_edge(u, v)) continue;
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    stack.push_back(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

enum class GraphClass {
    pt_free,  // parameter t
    st_free,  // parameter t
    lt_free,  // parameter t
    c5_free,
    bull_free,
    threshold,
    split,
    cograph,
    prime,
};

inline bool recognize(const Graph& g, GraphClass cls, int t = 0) {
    switch (cls) {
        case GraphClass::pt_free: return is_pt_free(g, t);
        case GraphClass::st_free: return is_st_free(g, t);
        case GraphClass::lt_free: return is_lt_free(g, t);
        case GraphClass::c5_free: return is_c5_free(g);
        case GraphClass::bull_free: return is_bull_free(g);
        case GraphClass::threshold: return is_threshold(g);
        case GraphClass::split: return is_split(g);
        case GraphClass::cograph: return is_cograph(g);
        case GraphClass::prime: return is_prime(g);
    }
    fail_invalid("recognize: unknown class");
}

// ---------------------------------------------------------------------------
// Corpus sampling.

// Description of the class to sample from. Forbidden induced subgraphs are
// checked by rejection; cographs and split graphs get direct constructions.
struct ClassSpec {
    std::vector<Graph> forbidden;
    bool connected = false;
    bool build_cograph = false;
    bool build_split = false;
};

inline Graph random_graph(int n, double density, Rng& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_bool(density)) g.add_edge(u, v);
    return g;
}

inline Graph random_cograph(int n, Rng& rng) {
    if (n <= 0) fail_invalid("random_cograph: need n >= 1");
    if (n == 1) return Graph(1);
    int left = rng.next_int(1, n - 1);
    Graph a = random_cograph(left, rng);
    Graph b = random_cograph(n - left, rng);
    bool join = rng.next_bool(0.5);
    Graph g(n);
    for (int u = 0; u < a.n(); ++u)
        for (int v = u + 1; v < a.n(); ++v)
            if (a.has_edge(u, v)) g.add_edge(u, v);
    for (int u = 0; u < b.n(); ++u)
        for (int v = u + 1; v < b.n(); ++v)
            if (b.has_edge(u, v)) g.add_edge(a.n() + u, a.n() + v);
    if (join)
        for (int u = 0; u < a.n(); ++u)
            for (int v = 0; v < b.n(); ++v) g.add_edge(u, a.n() + v);
    return g;
}

inline Graph random_split_graph(int n, double density, Rng& rng) {
    std::vector<int> label(n);
    std::iota(label.begin(), label.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(label[i], label[rng.next_int(0, i)]);
    int clique_size = rng.next_int(0, n);
    Graph g(n);
    for (int i = 0; i < clique_size; ++i)
        for (int j = i + 1; j < clique_size; ++j) g.add_edge(label[i], label[j]);
    for (int i = 0; i < clique_size; ++i)
        for (int j = clique_size; j < n; ++j)
            if (rng.next_bool(density)) g.add_edge(label[i], label[j]);
    return g;
}

inline bool in_class(const Graph& g, const ClassSpec& spec) {
    if (spec.connected && !is_connected(g)) return false;
    if (spec.build_cograph && !is_cograph(g)) return false;
    if (spec.build_split && !is_split(g)) return false;
    for (const Graph& f : spec.forbidden)
        if (contains_induced(g, f)) return false;
    return true;
}

inline Graph sample_in_class(const ClassSpec& spec, int n, double density, Rng& rng,
                             int budget = 100000) {
    for (int attempt = 0; attempt < budget; ++attempt) {
        Graph g = spec.build_cograph ? random_cograph(n, rng)
                : spec.build_split   ? random_split_graph(n, density, rng)
                                     : random_graph(n, density, rng);
        if (in_class(g, spec)) return g;
    }
    fail_cap("sample_in_class: sampling budget exhausted");
}

}  // namespace hcolor
