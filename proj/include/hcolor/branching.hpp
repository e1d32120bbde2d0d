#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hcolor/model.hpp"
#include "hcolor/monitor.hpp"

namespace hcolor {

// binom(s+t-2, s-1): upper bound for the Ramsey number of (s, t), used to cap
// per-part guess sizes.
inline long long ramsey_bound(int s, int t) {
    if (s < 1 || t < 1) fail_invalid("ramsey_bound: need s, t >= 1");
    long long n = s + t - 2, r = s - 1;
    if (r > n - r) r = n - r;
    long long result = 1;
    for (long long i = 1; i <= r; ++i) {
        if (result > (1LL << 56) / (n - r + i)) fail_cap("ramsey_bound: value overflows");
        result = result * (n - r + i) / i;
    }
    return result;
}

// Partition of V(G) around an ordered base X = (x1, x2, x3):
//   A1 = N(x1) \ X,  A2 = N(x2) \ (X u A1),  A3 = N(x3) \ (X u A1 u A2),
//   A4 = V \ N[X].
// x_i is complete to A_i and anticomplete to the later parts.
struct StarPartition {
    VertexSet x;                     // listing order
    std::array<VertexSet, 4> parts;  // A1..A4
    std::vector<int> part_of;       // 0 = X, 1..4 = part index

    const VertexSet& part(int i) const { return parts[i - 1]; }
};

inline StarPartition partition_around(const Graph& g, const VertexSet& x_ordered) {
    if (x_ordered.empty() || x_ordered.size() > 3)
        fail_invalid("partition_around: base must have 1..3 vertices");
    for (std::size_t i = 0; i < x_ordered.size(); ++i)
        for (std::size_t j = i + 1; j < x_ordered.size(); ++j)
            if (x_ordered[i] == x_ordered[j]) fail_invalid("partition_around: repeated vertex");
    for (std::size_t i = 1; i < x_ordered.size(); ++i) {
        bool has_earlier = false;
        for (std::size_t j = 0; j < i; ++j)
            if (g.has_edge(x_ordered[i], x_ordered[j])) has_earlier = true;
        if (!has_earlier)
            fail_invalid("partition_around: ordering not admissible (no earlier neighbor)");
    }

    StarPartition sp;
    sp.x = x_ordered;
    sp.part_of.assign(g.n(), 4);
    for (int v : x_ordered) sp.part_of[v] = 0;
    for (int v = 0; v < g.n(); ++v) {
        if (sp.part_of[v] == 0) continue;
        for (std::size_t i = 0; i < x_ordered.size(); ++i)
            if (g.has_edge(x_ordered[i], v)) {
                sp.part_of[v] = static_cast<int>(i) + 1;
                break;
            }
    }
    for (int v = 0; v < g.n(); ++v)
        if (sp.part_of[v] != 0) sp.parts[sp.part_of[v] - 1].push_back(v);
    return sp;
}

// A guess assigns to each color a subset R(v) of N[X]; the subsets are
// pairwise disjoint and meet each part A1..A3 in fewer than Ramsey(s, t)
// vertices. Anchored guesses additionally fix x in R(y).
struct Guess {
    std::vector<int> label;  // label[u] = color of the set containing u, else -1

    VertexSet set_of(int color) const {
        VertexSet out;
        for (int u = 0; u < static_cast<int>(label.size()); ++u)
            if (label[u] == color) out.push_back(u);
        return out;
    }
};

struct BranchOptions {
    // Skip guesses that contradict pattern adjacency between guessed
    // vertices. Sound: every guess compatible with a valid solution passes,
    // and soundness of the derived instances holds for arbitrary guesses.
    bool filter_consistent = true;
    long long guess_cap = 50'000'000;  // hard error beyond this many guesses
};

namespace detail {

template <class Visitor>
class GuessEnumerator {
public:
    GuessEnumerator(const Graph& g, const StarPartition& sp, const PatternGraph& h,
                    long long ramsey, std::optional<std::pair<int, int>> anchor,
                    const BranchOptions& opts, Visitor& visit)
        : g_(g), sp_(sp), h_(h), cap_(ramsey - 1), anchor_(anchor), opts_(opts), visit_(visit) {
        for (int v = 0; v < g.n(); ++v)
            if (sp.part_of[v] <= 3) domain_.push_back(v);
        counts_.assign(h.k(), {0, 0, 0, 0});
        guess_.label.assign(g.n(), -1);
    }

    long long run() {
        rec(0);
        return produced_;
    }

private:
    void emit() {
        if (++produced_ > opts_.guess_cap) fail_cap("enumerate_guesses: guess cap exceeded");
        visit_(guess_);
    }

    bool consistent_with_earlier(int u, int color) const {
        for (int w : domain_) {
            if (w == u) break;
            int cw = guess_.label[w];
            if (cw < 0 || !g_.has_edge(u, w)) continue;
            if (!h_.edge(color, cw)) return false;
        }
        return true;
    }

    void rec(std::size_t pos) {
        if (pos == domain_.size()) {
            emit();
            return;
        }
        int u = domain_[pos];
        int part = sp_.part_of[u];
        bool forced = anchor_ && anchor_->first == u;
        if (!forced) {
            guess_.label[u] = -1;
            rec(pos + 1);
        }
        for (int c = 0; c < h_.k(); ++c) {
            if (forced && c != anchor_->second) continue;
            if (part >= 1 && counts_[c][part] >= cap_) continue;
            if (opts_.filter_consistent && !consistent_with_earlier(u, c)) continue;
            guess_.label[u] = c;
            if (part >= 1) ++counts_[c][part];
            rec(pos + 1);
            if (part >= 1) --counts_[c][part];
        }
        guess_.label[u] = -1;
    }

    const Graph& g_;
    const StarPartition& sp_;
    const PatternGraph& h_;
    long long cap_;
    std::optional<std::pair<int, int>> anchor_;
    const BranchOptions& opts_;
    Visitor& visit_;
    VertexSet domain_;  // N[X], ascending
    std::vector<std::array<int, 4>> counts_;  // per color, per part 1..3
    Guess guess_;
    long long produced_ = 0;
};

}  // namespace detail

// Streams every guess exactly once (lazily; the full family can be huge).
// Returns the number of guesses produced.
template <class Visitor>
long long enumerate_guesses(const Graph& g, const StarPartition& sp, const PatternGraph& h,
                            int s, int t, std::optional<std::pair<int, int>> anchor,
                            const BranchOptions& opts, Visitor visit) {
    if (anchor && anchor->first != sp.x.front())
        fail_invalid("enumerate_guesses: anchor vertex must be the base vertex x1");
    detail::GuessEnumerator<Visitor> e(g, sp, h, ramsey_bound(s, t), anchor, opts, visit);
    return e.run();
}

// The set B^R of assignments contradicting a guess:
//  D1  u in X and u not in R(v);
//  D2  u in R(v') for some other color v';
//  D3  u has a neighbor in R(v') with vv' not a pattern edge;
//  D4  u in A_i \ R(v) and some neighbor u' in a later part has no neighbor
//      in A_i cap R(v).
inline std::vector<std::vector<bool>> disallowed_pairs(const Graph& g, const StarPartition& sp,
                                                       const PatternGraph& h, const Guess& guess) {
    int n = g.n(), k = h.k();
    std::vector<std::vector<bool>> bad(n, std::vector<bool>(k, false));

    // witness[u'][v]: u' has a neighbor labeled v inside part i, per part.
    std::vector<std::vector<std::array<bool, 4>>> witness(
        n, std::vector<std::array<bool, 4>>(k, {false, false, false, false}));
    for (int u = 0; u < n; ++u)
        for (int w = 0; w < n; ++w) {
            int cw = guess.label[w];
            if (cw < 0 || !g.has_edge(u, w)) continue;
            int pw = sp.part_of[w];
            if (pw >= 1 && pw <= 3) witness[u][cw][pw] = true;
        }

    for (int u = 0; u < n; ++u) {
        int pu = sp.part_of[u];
        for (int v = 0; v < k; ++v) {
            if (pu == 0 && guess.label[u] != v) {
                bad[u][v] = true;
                continue;
            }
            if (guess.label[u] >= 0 && guess.label[u] != v) {
                bad[u][v] = true;
                continue;
            }
            bool hit = false;
            for (int w = 0; w < n && !hit; ++w) {
                int cw = guess.label[w];
                if (cw >= 0 && g.has_edge(u, w) && !h.edge(v, cw)) hit = true;
            }
            if (!hit && pu >= 1 && pu <= 3 && guess.label[u] != v) {
                for (int w = 0; w < n && !hit; ++w)
                    if (g.has_edge(u, w) && sp.part_of[w] > pu && !witness[w][v][pu]) hit = true;
            }
            bad[u][v] = hit;
        }
    }
    return bad;
}

inline RevenueTable derived_revenue(const RevenueTable& rev,
                                    const std::vector<std::vector<bool>>& bad) {
    RevenueTable out = rev;
    for (int u = 0; u < out.host_size(); ++u)
        for (int v = 0; v < out.color_count(); ++v)
            if (bad[u][v]) out.value[u][v] = -1.0;
    return out;
}

// Keep only edges inside a single part A_i; X becomes isolated and all
// cross-part edges disappear.
inline Graph strip_cross_edges(const Graph& g, const StarPartition& sp) {
    Graph out(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.has_edge(u, v) && sp.part_of[u] != 0 && sp.part_of[u] == sp.part_of[v])
                out.add_edge(u, v);
    return out;
}

// ---------------------------------------------------------------------------
// Full branching: one subinstance pair per (anchor, guess).

struct BranchPair {
    Instance inst1;            // host G[A1], pattern H - y
    VertexSet map1;            // new -> old host vertex ids
    std::vector<int> colors1;  // new -> old color ids
    Instance inst2;            // host on A2 u A3 u A4 u X (stripped), pattern H
    VertexSet map2;
    int anchor_x = -1;
    int anchor_y = -1;
};

// Union of the two sub-solutions, lifted back to the original vertex ids.
inline PartialColoring combine_branch_solutions(const BranchPair& bp, int host_size,
                                                const PartialColoring& phi1,
                                                const PartialColoring& phi2) {
    PartialColoring out(host_size);
    for (std::size_t u = 0; u < bp.map1.size(); ++u)
        if (phi1.color[u] >= 0) out.color[bp.map1[u]] = bp.colors1[phi1.color[u]];
    for (std::size_t u = 0; u < bp.map2.size(); ++u)
        if (phi2.color[u] >= 0) out.color[bp.map2[u]] = phi2.color[u];
    return out;
}

struct BranchStats {
    long long anchors = 0;
    long long guesses = 0;
    VertexSet last_base;
    std::array<int, 4> last_part_sizes{0, 0, 0, 0};
};

inline PatternGraph pattern_minus_color(const PatternGraph& h, int y, std::vector<int>& colors) {
    colors.clear();
    for (int c = 0; c < h.k(); ++c)
        if (c != y) colors.push_back(c);
    Graph sub(h.k() - 1);
    for (std::size_t a = 0; a < colors.size(); ++a)
        for (std::size_t b = a + 1; b < colors.size(); ++b)
            if (h.graph.has_edge(colors[a], colors[b]))
                sub.add_edge(static_cast<int>(a), static_cast<int>(b));
    return PatternGraph{std::move(sub), false};
}

inline RevenueTable restrict_table(const RevenueTable& rev, const VertexSet& verts,
                                   const std::vector<int>& colors) {
    RevenueTable out(static_cast<int>(verts.size()), static_cast<int>(colors.size()));
    for (std::size_t u = 0; u < verts.size(); ++u)
        for (std::size_t c = 0; c < colors.size(); ++c)
            out.value[u][c] = rev.at(verts[u], colors[c]);
    return out;
}

namespace detail {

inline void check_branch_preconditions(const Instance& inst, const char* who) {
    validate_instance(inst);
    require_irreflexive(inst, who);
    if (inst.host.n() < 5)
        fail_invalid(std::string(who) + ": host needs at least 5 vertices");
    if (!is_connected(inst.host)) fail_class(std::string(who) + ": host must be connected");
}

}  // namespace detail

// Full branching anchored at every positive (x, y). The visitor receives
// each pair; max over pairs of OPT1 + OPT2 equals OPT of the input, and the
// union of per-pair optima is an optimum solution.
template <class Visitor>
BranchStats branch_full_stream(const Instance& inst, int s, int t, const BranchOptions& opts,
                               Visitor visit) {
    detail::check_branch_preconditions(inst, "branch_full");
    if (!inst.rev.has_positive()) fail_class("branch_full: revenue has no positive value");

    BranchStats stats;
    std::vector<int> all_colors;
    for (int c = 0; c < inst.pattern.k(); ++c) all_colors.push_back(c);

    for (int x = 0; x < inst.host.n(); ++x) {
        bool x_used = false;
        StarPartition sp;
        Graph stripped;
        VertexSet side1, side2;
        for (int y = 0; y < inst.pattern.k(); ++y) {
            if (inst.rev.at(x, y) <= 0) continue;
            if (!x_used) {
                MonitorBase base = find_monitor_base(inst.host, x, /*pad_to_three=*/true);
                sp = partition_around(inst.host, base.base);
                stripped = strip_cross_edges(inst.host, sp);
                side1 = sp.part(1);
                side2.clear();
                for (int v = 0; v < inst.host.n(); ++v)
                    if (sp.part_of[v] != 1) side2.push_back(v);
                stats.last_base = base.base;
                for (int i = 1; i <= 4; ++i)
                    stats.last_part_sizes[i - 1] = static_cast<int>(sp.part(i).size());
                x_used = true;
            }
            ++stats.anchors;
            auto sub1 = induced_subgraph(stripped, side1);
            auto sub2 = induced_subgraph(stripped, side2);
            std::vector<int> colors1;
            PatternGraph pattern1 = pattern_minus_color(inst.pattern, y, colors1);

            stats.guesses += enumerate_guesses(
                inst.host, sp, inst.pattern, s, t, std::make_pair(x, y), opts,
                [&](const Guess& guess) {
                    auto bad = disallowed_pairs(inst.host, sp, inst.pattern, guess);
                    RevenueTable adjusted = derived_revenue(inst.rev, bad);
                    BranchPair pair;
                    pair.inst1 = Instance{sub1.graph, pattern1,
                                          restrict_table(adjusted, sub1.to_old, colors1)};
                    pair.map1 = sub1.to_old;
                    pair.colors1 = colors1;
                    pair.inst2 = Instance{sub2.graph, inst.pattern,
                                          restrict_table(adjusted, sub2.to_old, all_colors)};
                    pair.map2 = sub2.to_old;
                    pair.anchor_x = x;
                    pair.anchor_y = y;
                    visit(pair);
                });
        }
    }
    return stats;
}

inline std::vector<BranchPair> branch_full(const Instance& inst, int s, int t,
                                           const BranchOptions& opts = {}) {
    std::vector<BranchPair> out;
    branch_full_stream(inst, s, t, opts, [&](const BranchPair& p) { out.push_back(p); });
    return out;
}

// ---------------------------------------------------------------------------
// Simplified branching: one stripped host G', one revenue function per guess.
// Preparation (base, partition, stripped host) is separate from the guess
// stream so callers can set up recursion on G' before consuming revenues.

struct SimplifiedBranch {
    Graph stripped;
    StarPartition partition;
};

inline SimplifiedBranch prepare_simplified_branch(const Instance& inst) {
    detail::check_branch_preconditions(inst, "branch_simplified");
    MonitorBase base = find_monitor_base(inst.host, std::nullopt, /*pad_to_three=*/true);
    SimplifiedBranch out;
    out.partition = partition_around(inst.host, base.base);
    out.stripped = strip_cross_edges(inst.host, out.partition);
    return out;
}

template <class Visitor>
long long stream_simplified_revenues(const Instance& inst, const SimplifiedBranch& branch, int s,
                                     int t, const BranchOptions& opts, Visitor visit) {
    return enumerate_guesses(
        inst.host, branch.partition, inst.pattern, s, t, std::nullopt, opts,
        [&](const Guess& guess) {
            auto bad = disallowed_pairs(inst.host, branch.partition, inst.pattern, guess);
            visit(derived_revenue(inst.rev, bad));
        });
}

inline std::pair<Graph, std::vector<RevenueTable>> branch_simplified(const Instance& inst, int s,
                                                                     int t,
                                                                     const BranchOptions& opts = {}) {
    SimplifiedBranch b = prepare_simplified_branch(inst);
    std::vector<RevenueTable> tables;
    stream_simplified_revenues(inst, b, s, t, opts,
                               [&](RevenueTable rev) { tables.push_back(std::move(rev)); });
    return {b.stripped, std::move(tables)};
}

}  // namespace hcolor
