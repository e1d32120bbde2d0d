#pragma once

#include <optional>
#include <vector>

#include "hcolor/graph.hpp"
#include "hcolor/util.hpp"

namespace hcolor {

// M is a monitor in a connected graph when every component of g - M has some
// vertex of M complete to it. Implies every maximal clique meets M.
inline bool is_monitor(const Graph& g, const VertexSet& m) {
    if (!is_connected(g)) fail_class("is_monitor: graph must be connected");
    VertexSet rest = set_difference(g.all_vertices(), [&] {
        VertexSet sorted = m;
        std::sort(sorted.begin(), sorted.end());
        return sorted;
    }());
    for (const VertexSet& comp : components_within(g, rest)) {
        bool covered = false;
        for (int w : m)
            if (is_complete_to(g, w, comp)) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

// Per-component complete witnesses, for diagnostics. Empty witness id (-1)
// marks an uncovered component, i.e. m is not a monitor.
struct MonitorWitness {
    VertexSet component;
    int witness;
};

inline std::vector<MonitorWitness> monitor_witnesses(const Graph& g, const VertexSet& m) {
    VertexSet sorted = m;
    std::sort(sorted.begin(), sorted.end());
    VertexSet rest = set_difference(g.all_vertices(), sorted);
    std::vector<MonitorWitness> out;
    for (const VertexSet& comp : components_within(g, rest)) {
        int witness = -1;
        for (int w : m)
            if (is_complete_to(g, w, comp)) {
                witness = w;
                break;
            }
        out.push_back({comp, witness});
    }
    return out;
}

// An ordered set X (|X| <= 3) with g[X] a path in listing order and N[X] a
// monitor. When an anchor is given it is the first path endpoint. Padded
// bases may extend the path by vertices with an earlier neighbor, so the
// ordering stays admissible for the branching partition.
struct MonitorBase {
    VertexSet base;              // listing order
    std::optional<int> anchor;
    bool padded = false;

    VertexSet sorted() const {
        VertexSet s = base;
        std::sort(s.begin(), s.end());
        return s;
    }
};

namespace detail {

inline bool try_base(const Graph& g, const VertexSet& xs, MonitorBase& out) {
    if (!is_monitor(g, closed_neighborhood(g, xs))) return false;
    out.base = xs;
    return true;
}

}  // namespace detail

// Candidate bases are searched by increasing size; guaranteed to exist when
// g is P6-free. pad_to_three grows the base to exactly three vertices while
// keeping g[X] connected, as the branching step requires.
inline MonitorBase find_monitor_base(const Graph& g, std::optional<int> anchor = std::nullopt,
                                     bool pad_to_three = false) {
    if (!is_connected(g)) fail_class("find_monitor_base: graph must be connected");
    MonitorBase result;
    result.anchor = anchor;

    VertexSet starts = anchor ? VertexSet{*anchor} : g.all_vertices();
    bool found = false;
    for (int a : starts) {
        if (detail::try_base(g, {a}, result)) {
            found = true;
            break;
        }
    }
    if (!found) {
        for (int a : starts) {
            for (int b = 0; b < g.n() && !found; ++b)
                if (b != a && g.has_edge(a, b)) found = detail::try_base(g, {a, b}, result);
            if (found) break;
        }
    }
    if (!found) {
        for (int a : starts) {
            for (int b = 0; b < g.n() && !found; ++b) {
                if (b == a || !g.has_edge(a, b)) continue;
                for (int c = 0; c < g.n() && !found; ++c) {
                    if (c == a || c == b) continue;
                    if (!g.has_edge(b, c) || g.has_edge(a, c)) continue;  // induced path a-b-c
                    found = detail::try_base(g, {a, b, c}, result);
                }
            }
            if (found) break;
        }
    }
    if (!found)
        fail_class("find_monitor_base: no base of size <= 3 found (host not P6-free?)");

    if (pad_to_three) {
        if (g.n() < 3)
            fail_class("find_monitor_base: host too small to pad the base to three vertices");
        while (result.base.size() < 3) {
            auto in_base = [&](int v) {
                return std::find(result.base.begin(), result.base.end(), v) != result.base.end();
            };
            int pick = -1;
            for (int v = 0; v < g.n() && pick < 0; ++v)
                if (!in_base(v) && g.has_edge(result.base.back(), v)) pick = v;
            for (int v = 0; v < g.n() && pick < 0; ++v) {
                if (in_base(v)) continue;
                for (int x : result.base)
                    if (g.has_edge(x, v)) {
                        pick = v;
                        break;
                    }
            }
            if (pick < 0)
                fail_class("find_monitor_base: cannot pad the base in a connected graph");
            result.base.push_back(pick);
            result.padded = true;
        }
    }
    return result;
}

}  // namespace hcolor
