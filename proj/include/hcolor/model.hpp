#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "hcolor/graph.hpp"
#include "hcolor/util.hpp"

namespace hcolor {

// Pattern graph ("colors"). Loops are permitted only with the reflexive flag
// set; solvers reject reflexive patterns, only the list-coloring oracle and
// the hardness constructions accept them.
struct PatternGraph {
    Graph graph;
    bool reflexive = false;

    int k() const { return graph.n(); }

    // Color adjacency, loop-aware.
    bool edge(int a, int b) const {
        if (a == b) return reflexive && graph.has_loop(a);
        return graph.has_edge(a, b);
    }
};

inline PatternGraph make_pattern(Graph g, bool reflexive = false) {
    if (!reflexive && g.has_any_loop())
        fail_invalid("make_pattern: loops require the reflexive flag");
    return PatternGraph{std::move(g), reflexive};
}

// Dense revenue table rev(u, v) for u in V(host), v in V(pattern).
struct RevenueTable {
    std::vector<std::vector<double>> value;  // value[u][v]

    RevenueTable() = default;
    RevenueTable(int n, int k, double fill = 0.0)
        : value(n, std::vector<double>(k, fill)) {}

    int host_size() const { return static_cast<int>(value.size()); }
    int color_count() const { return value.empty() ? 0 : static_cast<int>(value[0].size()); }

    double at(int u, int v) const {
        if (u < 0 || u >= host_size() || v < 0 || v >= color_count())
            fail_invalid("RevenueTable: index out of bounds");
        return value[u][v];
    }

    bool has_positive() const {
        for (const auto& row : value)
            for (double x : row)
                if (x > 0) return true;
        return false;
    }
};

struct Instance {
    Graph host;
    PatternGraph pattern;
    RevenueTable rev;
};

inline void validate_instance(const Instance& inst) {
    if (inst.host.has_any_loop()) fail_invalid("instance: host graph must be loop-free");
    if (inst.rev.host_size() != inst.host.n() || inst.rev.color_count() != inst.pattern.k())
        fail_invalid("instance: revenue table dimensions do not match");
    for (const auto& row : inst.rev.value)
        for (double x : row)
            if (!std::isfinite(x)) fail_invalid("instance: revenue values must be finite");
}

inline void require_irreflexive(const Instance& inst, const char* who) {
    if (inst.pattern.reflexive)
        fail_invalid(std::string(who) + ": reflexive patterns are not accepted here");
}

// Partial mapping V(host) -> V(pattern); -1 marks vertices outside the domain.
struct PartialColoring {
    std::vector<int> color;

    PartialColoring() = default;
    explicit PartialColoring(int n) : color(n, -1) {}

    int domain_size() const {
        int d = 0;
        for (int c : color)
            if (c >= 0) ++d;
        return d;
    }

    std::vector<std::pair<int, int>> assignments() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < static_cast<int>(color.size()); ++u)
            if (color[u] >= 0) out.emplace_back(u, color[u]);
        return out;
    }
};

// Deterministic tie-break order: lexicographically smaller (vertex, color)
// assignment sequence.
inline bool lex_less(const PartialColoring& a, const PartialColoring& b) {
    auto sa = a.assignments();
    auto sb = b.assignments();
    return std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(), sb.end());
}

inline double revenue(const Instance& inst, const PartialColoring& phi) {
    if (static_cast<int>(phi.color.size()) != inst.host.n())
        fail_invalid("revenue: coloring size does not match host");
    double total = 0.0;
    for (int u = 0; u < inst.host.n(); ++u) {
        int c = phi.color[u];
        if (c < 0) continue;
        total += inst.rev.at(u, c);
    }
    return total;
}

inline bool is_valid(const Instance& inst, const PartialColoring& phi) {
    if (static_cast<int>(phi.color.size()) != inst.host.n()) return false;
    for (int u = 0; u < inst.host.n(); ++u) {
        int cu = phi.color[u];
        if (cu < 0) continue;
        if (cu >= inst.pattern.k()) return false;
        for (int v = u + 1; v < inst.host.n(); ++v) {
            int cv = phi.color[v];
            if (cv < 0 || !inst.host.has_edge(u, v)) continue;
            if (!inst.pattern.edge(cu, cv)) return false;
        }
    }
    return true;
}

// Drop assignments with negative revenue; never lowers the total and keeps
// validity (removing vertices from the domain cannot break edges).
inline PartialColoring strip_negative(const Instance& inst, const PartialColoring& phi) {
    PartialColoring out = phi;
    for (int u = 0; u < inst.host.n(); ++u)
        if (out.color[u] >= 0 && inst.rev.at(u, out.color[u]) < 0) out.color[u] = -1;
    return out;
}

// List-coloring encoding: revenue 1 for allowed colors, -1 for the rest, so
// the list instance is satisfiable iff OPT equals |V(host)|. Empty lists are
// all -1 rows.
inline Instance from_list_instance(const Graph& g, const PatternGraph& h,
                                   const std::vector<VertexSet>& lists) {
    if (static_cast<int>(lists.size()) != g.n())
        fail_invalid("from_list_instance: one list per vertex required");
    RevenueTable rev(g.n(), h.k(), -1.0);
    for (int u = 0; u < g.n(); ++u)
        for (int v : lists[u]) {
            if (v < 0 || v >= h.k()) fail_invalid("from_list_instance: color out of range");
            rev.value[u][v] = 1.0;
        }
    return Instance{g, h, std::move(rev)};
}

// Trivial solver for edgeless hosts: vertices are independent, so each takes
// its best positive assignment (smallest color id on ties).
inline std::pair<double, PartialColoring> solve_edgeless(const Instance& inst) {
    validate_instance(inst);
    require_irreflexive(inst, "solve_edgeless");
    if (inst.host.edge_count() > 0) fail_class("solve_edgeless: host has an edge");
    PartialColoring phi(inst.host.n());
    double total = 0.0;
    for (int u = 0; u < inst.host.n(); ++u) {
        int best = -1;
        double best_value = 0.0;
        for (int v = 0; v < inst.pattern.k(); ++v)
            if (inst.rev.at(u, v) > best_value) {
                best_value = inst.rev.at(u, v);
                best = v;
            }
        if (best >= 0) {
            phi.color[u] = best;
            total += best_value;
        }
    }
    return {total, phi};
}

// ---------------------------------------------------------------------------
// Multicoloring: vertices map to nonempty color subsets; adjacent vertices
// need disjoint sets that are complete to each other in the pattern.

// Masks are bitmasks over V(pattern); mask m corresponds to table column m-1.
struct MulticolorInstance {
    Graph host;
    PatternGraph pattern;
    std::vector<std::vector<double>> rev;  // rev[u][mask - 1], mask = 1 .. 2^k-1

    int subset_count() const { return (1 << pattern.k()) - 1; }
    double at(int u, int mask) const {
        if (mask <= 0 || mask > subset_count()) fail_invalid("MulticolorInstance: bad mask");
        return rev[u][mask - 1];
    }
};

struct MultiColoring {
    std::vector<int> mask;  // 0 = outside the domain

    MultiColoring() = default;
    explicit MultiColoring(int n) : mask(n, 0) {}
};

inline void validate_multicolor_instance(const MulticolorInstance& minst) {
    if (minst.pattern.reflexive)
        fail_invalid("multicolor: reflexive patterns are not supported");
    if (minst.host.has_any_loop()) fail_invalid("multicolor: host must be loop-free");
    if (static_cast<int>(minst.rev.size()) != minst.host.n())
        fail_invalid("multicolor: one revenue row per vertex required");
    for (const auto& row : minst.rev)
        if (static_cast<int>(row.size()) != minst.subset_count())
            fail_invalid("multicolor: revenue row must cover all nonempty subsets");
}

// For every color mask, the set of colors adjacent (in the pattern) to all
// of its members; entry 0 is the full color set.
inline std::vector<int> complete_to_table(const PatternGraph& h) {
    int k = h.k();
    std::vector<int> table(std::size_t{1} << k, 0);
    for (int mask = 0; mask < (1 << k); ++mask) {
        int ok = (1 << k) - 1;
        for (int i = 0; i < k; ++i) {
            if (!(mask >> i & 1)) continue;
            int row = 0;
            for (int j = 0; j < k; ++j)
                if (h.edge(i, j)) row |= 1 << j;
            ok &= row;
        }
        table[mask] = ok;
    }
    return table;
}

// True when the two color sets may sit on adjacent host vertices: disjoint
// and complete to each other in the pattern.
inline bool masks_compatible(const PatternGraph& h, int a, int b) {
    if ((a & b) != 0) return false;
    for (int i = 0; i < h.k(); ++i) {
        if (!(a >> i & 1)) continue;
        for (int j = 0; j < h.k(); ++j) {
            if (!(b >> j & 1)) continue;
            if (!h.edge(i, j)) return false;
        }
    }
    return true;
}

inline bool is_valid_multicolor(const MulticolorInstance& minst, const MultiColoring& phi) {
    if (static_cast<int>(phi.mask.size()) != minst.host.n()) return false;
    for (int u = 0; u < minst.host.n(); ++u) {
        if (phi.mask[u] < 0 || phi.mask[u] > minst.subset_count()) return false;
        if (phi.mask[u] == 0) continue;
        for (int v = u + 1; v < minst.host.n(); ++v) {
            if (phi.mask[v] == 0 || !minst.host.has_edge(u, v)) continue;
            if (!masks_compatible(minst.pattern, phi.mask[u], phi.mask[v])) return false;
        }
    }
    return true;
}

inline double multicolor_revenue(const MulticolorInstance& minst, const MultiColoring& phi) {
    double total = 0.0;
    for (int u = 0; u < minst.host.n(); ++u)
        if (phi.mask[u] != 0) total += minst.at(u, phi.mask[u]);
    return total;
}

// Embed a plain coloring instance: singleton subsets keep their revenue,
// larger subsets get -1 and are therefore never used by an optimum.
inline MulticolorInstance to_multicolor(const Instance& inst) {
    validate_instance(inst);
    require_irreflexive(inst, "to_multicolor");
    MulticolorInstance m{inst.host, inst.pattern, {}};
    m.rev.assign(inst.host.n(), std::vector<double>(m.subset_count(), -1.0));
    for (int u = 0; u < inst.host.n(); ++u)
        for (int v = 0; v < inst.pattern.k(); ++v)
            m.rev[u][(1 << v) - 1] = inst.rev.at(u, v);
    return m;
}

// Power pattern: one color per nonempty subset of V(h), adjacent iff the
// subsets are disjoint and complete to each other in h. Color c represents
// mask c+1.
inline PatternGraph hat_pattern(const PatternGraph& h) {
    require_irreflexive(Instance{Graph(0), h, RevenueTable(0, h.k())}, "hat_pattern");
    if (h.k() > 20) fail_cap("hat_pattern: pattern too large to expand");
    int count = (1 << h.k()) - 1;
    Graph hg(count);
    for (int a = 1; a <= count; ++a)
        for (int b = a + 1; b <= count; ++b)
            if (masks_compatible(h, a, b)) hg.add_edge(a - 1, b - 1);
    return PatternGraph{std::move(hg), false};
}

// A multicolor instance read as a coloring instance over the power pattern;
// solutions translate back mask-for-color.
inline Instance multicolor_as_hat_instance(const MulticolorInstance& minst) {
    Instance inst{minst.host, hat_pattern(minst.pattern), RevenueTable{}};
    inst.rev.value = minst.rev;
    return inst;
}

inline MultiColoring hat_coloring_to_multicolor(const PartialColoring& phi) {
    MultiColoring out(static_cast<int>(phi.color.size()));
    for (std::size_t u = 0; u < phi.color.size(); ++u)
        if (phi.color[u] >= 0) out.mask[u] = phi.color[u] + 1;
    return out;
}

}  // namespace hcolor
