#pragma once

#include <functional>
#include <numeric>
#include <utility>
#include <vector>

#include "hcolor/model.hpp"
#include "hcolor/oracle.hpp"
#include "hcolor/recognize.hpp"
#include "hcolor/solvers.hpp"

namespace hcolor {

// ---------------------------------------------------------------------------
// Modular decomposition.

enum class QuotientKind { none, edgeless, complete, prime };

struct ModularNode {
    VertexSet vertices;         // the strong module
    std::vector<int> children;  // node indices; empty for leaves
    QuotientKind kind = QuotientKind::none;
    Graph quotient;             // graph on the children (internal nodes only)
};

struct ModularDecompositionTree {
    std::vector<ModularNode> nodes;
    int root = -1;

    const ModularNode& node(int i) const { return nodes[i]; }
};

namespace detail {

// Maximal proper strong modules of g[B], |B| >= 2. Disconnected graphs split
// into components, co-disconnected ones into co-components; otherwise two
// vertices share a block iff some proper module of g[B] contains both.
inline std::vector<VertexSet> modular_partition(const Graph& g, const VertexSet& b) {
    auto comps = components_within(g, b);
    if (comps.size() > 1) return comps;
    auto cocomps = co_components_within(g, b);
    if (cocomps.size() > 1) return cocomps;

    auto sub = induced_subgraph(g, b);
    int m = sub.graph.n();
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
        return parent[v] == v ? v : parent[v] = find(parent[v]);
    };
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v)
            if (static_cast<int>(module_closure(sub.graph, {u, v}).size()) < m)
                parent[find(u)] = find(v);
    std::vector<VertexSet> blocks(m);
    for (int v = 0; v < m; ++v) blocks[find(v)].push_back(sub.to_old[v]);
    std::vector<VertexSet> out;
    for (auto& blk : blocks)
        if (!blk.empty()) out.push_back(std::move(blk));
    std::sort(out.begin(), out.end());
    return out;
}

inline int build_modular_tree(const Graph& g, VertexSet verts, ModularDecompositionTree& tree) {
    ModularNode node;
    node.vertices = verts;
    if (verts.size() == 1) {
        tree.nodes.push_back(std::move(node));
        return static_cast<int>(tree.nodes.size()) - 1;
    }
    auto blocks = modular_partition(g, verts);
    for (const VertexSet& blk : blocks)
        node.children.push_back(build_modular_tree(g, blk, tree));

    int m = static_cast<int>(blocks.size());
    Graph quo(m);
    int edges = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (g.has_edge(blocks[i].front(), blocks[j].front())) {
                quo.add_edge(i, j);
                ++edges;
            }
    node.kind = edges == 0              ? QuotientKind::edgeless
              : edges == m * (m - 1) / 2 ? QuotientKind::complete
                                          : QuotientKind::prime;
    node.quotient = std::move(quo);
    tree.nodes.push_back(std::move(node));
    return static_cast<int>(tree.nodes.size()) - 1;
}

}  // namespace detail

inline ModularDecompositionTree modular_decomposition(const Graph& g) {
    if (g.n() < 1) fail_invalid("modular_decomposition: need at least one vertex");
    ModularDecompositionTree tree;
    tree.root = detail::build_modular_tree(g, g.all_vertices(), tree);
    return tree;
}

// ---------------------------------------------------------------------------
// Multicolor machinery.

// Solves Max Partial hat(H)-Coloring instances arising from prime quotients.
using PrimeSolver = std::function<SolveReport(const Instance&)>;

inline PrimeSolver oracle_prime_solver(const OracleLimits& limits = {}) {
    return [limits](const Instance& inst) {
        auto [opt, phi] = oracle_solve(inst, limits);
        SolveReport report;
        report.opt = opt;
        report.solution = phi;
        return report;
    };
}

struct RestrictedMulticolor {
    MulticolorInstance inst;
    VertexSet to_old;
};

// Revenue restricted to module B and color allowance W: subsets outside W
// become -1 and are therefore never used.
inline RestrictedMulticolor restrict_revenue(const MulticolorInstance& minst, const VertexSet& b,
                                             int allowance_mask) {
    auto sub = induced_subgraph(minst.host, b);
    MulticolorInstance out{sub.graph, minst.pattern, {}};
    out.rev.assign(sub.graph.n(), std::vector<double>(minst.subset_count(), -1.0));
    for (int u = 0; u < sub.graph.n(); ++u)
        for (int mask = 1; mask <= minst.subset_count(); ++mask)
            if ((mask & ~allowance_mask) == 0) out.rev[u][mask - 1] = minst.at(sub.to_old[u], mask);
    return {std::move(out), sub.to_old};
}

namespace detail {

struct QuotientSolution {
    double value = 0.0;
    std::vector<int> child_allowance;  // per child: color mask granted, 0 = skipped
};

// Solve the quotient instance: children are vertices, child_value[i][w] is
// the optimum of child i under allowance w (w = 0 allowed, value 0).
inline QuotientSolution solve_quotient(const ModularNode& node,
                                       const std::vector<std::vector<double>>& child_value,
                                       const PatternGraph& pattern, int allowance,
                                       const PrimeSolver& prime_solver, int pattern_cap) {
    int m = static_cast<int>(node.children.size());
    int subsets = (1 << pattern.k()) - 1;
    QuotientSolution out;
    out.child_allowance.assign(m, 0);

    if (node.kind == QuotientKind::edgeless) {
        // No interaction: every child keeps the full allowance.
        for (int i = 0; i < m; ++i) {
            out.value += child_value[i][allowance];
            out.child_allowance[i] = allowance;
        }
        return out;
    }

    if (node.kind == QuotientKind::complete) {
        // Children are pairwise adjacent: their color sets must be pairwise
        // disjoint and complete to each other. Scan children in order with
        // the union of granted sets as state.
        std::vector<int> complete_to = complete_to_table(pattern);
        int states = 1 << pattern.k();
        std::vector<std::vector<double>> dp(m + 1, std::vector<double>(states, -1.0));
        dp[0][0] = 0.0;
        for (int i = 0; i < m; ++i)
            for (int u = 0; u < states; ++u) {
                if (dp[i][u] < 0) continue;
                if (dp[i][u] > dp[i + 1][u]) dp[i + 1][u] = dp[i][u];  // skip child i
                int available = allowance & ~u & complete_to[u];
                for (int w = available; w > 0; w = (w - 1) & available) {
                    double value = dp[i][u] + child_value[i][w];
                    if (value > dp[i + 1][u | w]) dp[i + 1][u | w] = value;
                }
            }
        int best_state = 0;
        for (int u = 1; u < states; ++u)
            if (dp[m][u] > dp[m][best_state]) best_state = u;
        out.value = dp[m][best_state];
        // Walk backwards to recover the per-child grants.
        int state = best_state;
        for (int i = m; i-- > 0;) {
            if (dp[i][state] == dp[i + 1][state]) {
                out.child_allowance[i] = 0;
                continue;
            }
            bool found = false;
            for (int w = state; w > 0 && !found; w = (w - 1) & state) {
                int before = state & ~w;
                if (dp[i][before] < 0) continue;
                int available = allowance & ~before & complete_to[before];
                if ((w & ~available) != 0) continue;
                if (dp[i][before] + child_value[i][w] == dp[i + 1][state]) {
                    out.child_allowance[i] = w;
                    state = before;
                    found = true;
                }
            }
            if (!found) fail_invalid("solve_quotient: internal reconstruction failure");
        }
        return out;
    }

    // Prime quotient: read as a coloring instance over the power pattern and
    // hand it to the supplied solver.
    if (subsets > pattern_cap)
        fail_cap("solve_quotient: power pattern exceeds the pattern-size cap");
    MulticolorInstance quotient_inst{node.quotient, pattern, {}};
    quotient_inst.rev.assign(m, std::vector<double>(subsets, 0.0));
    for (int i = 0; i < m; ++i)
        for (int mask = 1; mask <= subsets; ++mask)
            quotient_inst.rev[i][mask - 1] = child_value[i][mask & allowance];
    SolveReport prime = prime_solver(multicolor_as_hat_instance(quotient_inst));
    out.value = prime.opt;
    for (int i = 0; i < m; ++i)
        if (prime.solution.color[i] >= 0)
            out.child_allowance[i] = (prime.solution.color[i] + 1) & allowance;
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// One modular-combination layer: optimum of the instance from per-module
// optima plus the quotient optimum; modules are solved by self-recursion.

inline std::pair<double, MultiColoring> combine_modules(const MulticolorInstance& minst,
                                                        const PrimeSolver& prime_solver,
                                                        int pattern_cap = 64) {
    validate_multicolor_instance(minst);
    int n = minst.host.n();
    MultiColoring phi(n);
    if (n == 0) return {0.0, phi};
    int full = minst.subset_count();
    if (n == 1) {
        double best = 0.0;
        int choice = 0;
        for (int mask = 1; mask <= full; ++mask)
            if (minst.at(0, mask) > best) {
                best = minst.at(0, mask);
                choice = mask;
            }
        phi.mask[0] = choice;
        return {best, phi};
    }

    auto blocks = detail::modular_partition(minst.host, minst.host.all_vertices());
    int m = static_cast<int>(blocks.size());
    ModularNode node;
    node.vertices = minst.host.all_vertices();
    Graph quo(m);
    int edges = 0;
    for (int i = 0; i < m; ++i) {
        node.children.push_back(i);
        for (int j = i + 1; j < m; ++j)
            if (minst.host.has_edge(blocks[i].front(), blocks[j].front())) {
                quo.add_edge(i, j);
                ++edges;
            }
    }
    node.kind = edges == 0               ? QuotientKind::edgeless
              : edges == m * (m - 1) / 2 ? QuotientKind::complete
                                          : QuotientKind::prime;
    node.quotient = std::move(quo);

    // Per module and allowance, solve the restricted instance recursively.
    std::vector<std::vector<double>> child_value(m, std::vector<double>(full + 1, 0.0));
    std::vector<std::vector<MultiColoring>> child_phi(m);
    std::vector<RestrictedMulticolor> restricted;
    for (int i = 0; i < m; ++i) {
        child_phi[i].resize(full + 1);
        for (int w = 1; w <= full; ++w) {
            RestrictedMulticolor r = restrict_revenue(minst, blocks[i], w);
            auto [opt, sub_phi] = combine_modules(r.inst, prime_solver, pattern_cap);
            child_value[i][w] = opt;
            child_phi[i][w] = sub_phi;
        }
    }

    detail::QuotientSolution q =
        detail::solve_quotient(node, child_value, minst.pattern, full, prime_solver, pattern_cap);
    for (int i = 0; i < m; ++i) {
        int w = q.child_allowance[i];
        if (w == 0) continue;
        for (std::size_t u = 0; u < blocks[i].size(); ++u)
            phi.mask[blocks[i][u]] = child_phi[i][w].mask[u];
    }
    return {q.value, phi};
}

// ---------------------------------------------------------------------------
// Bottom-up dynamic programming over the whole decomposition tree, one table
// entry per (strong module, color allowance).

inline std::pair<double, MultiColoring> solve_multicolor_dp(const MulticolorInstance& minst,
                                                            const PrimeSolver& prime_solver,
                                                            int pattern_cap = 64) {
    validate_multicolor_instance(minst);
    MultiColoring phi(minst.host.n());
    if (minst.host.n() == 0) return {0.0, phi};

    ModularDecompositionTree tree = modular_decomposition(minst.host);
    int full = minst.subset_count();

    struct Entry {
        double value = 0.0;
        int leaf_choice = 0;
        std::vector<int> child_allowance;
    };
    std::vector<std::vector<Entry>> table(tree.nodes.size());

    // Nodes were appended children-first, so index order is already bottom-up.
    for (std::size_t idx = 0; idx < tree.nodes.size(); ++idx) {
        const ModularNode& node = tree.nodes[idx];
        table[idx].resize(full + 1);
        if (node.children.empty()) {
            int u = node.vertices.front();
            for (int w = 1; w <= full; ++w) {
                Entry& e = table[idx][w];
                for (int mask = w; mask > 0; mask = (mask - 1) & w)
                    if (minst.at(u, mask) > e.value) {
                        e.value = minst.at(u, mask);
                        e.leaf_choice = mask;
                    }
            }
            continue;
        }
        int m = static_cast<int>(node.children.size());
        std::vector<std::vector<double>> child_value(m, std::vector<double>(full + 1, 0.0));
        for (int i = 0; i < m; ++i)
            for (int w = 1; w <= full; ++w) child_value[i][w] = table[node.children[i]][w].value;
        for (int w = 1; w <= full; ++w) {
            detail::QuotientSolution q = detail::solve_quotient(node, child_value, minst.pattern,
                                                                w, prime_solver, pattern_cap);
            table[idx][w].value = q.value;
            table[idx][w].child_allowance = std::move(q.child_allowance);
        }
    }

    // Reconstruct top-down, narrowing allowances along the chosen grants.
    std::function<void(int, int)> emit = [&](int idx, int w) {
        if (w == 0) return;
        const ModularNode& node = tree.nodes[idx];
        const Entry& e = table[idx][w];
        if (node.children.empty()) {
            phi.mask[node.vertices.front()] = e.leaf_choice;
            return;
        }
        for (std::size_t i = 0; i < node.children.size(); ++i)
            emit(node.children[i], e.child_allowance[i]);
    };
    emit(tree.root, full);
    return {table[tree.root][full].value, phi};
}

// ---------------------------------------------------------------------------
// Plain coloring solved through the multicolor reduction; prime quotients go
// to the supplied solver as power-pattern coloring instances.

inline SolveReport solve_via_prime_reduction(const Instance& inst,
                                             const PrimeSolver& prime_solver,
                                             int pattern_cap = 64) {
    validate_instance(inst);
    require_irreflexive(inst, "solve_via_prime_reduction");
    if ((1 << inst.pattern.k()) - 1 > pattern_cap)
        fail_cap("solve_via_prime_reduction: power pattern exceeds the pattern-size cap");
    SolveReport report;
    report.solution = PartialColoring(inst.host.n());
    if (inst.host.n() == 0) return report;

    auto [opt, multi] = solve_multicolor_dp(to_multicolor(inst), prime_solver, pattern_cap);
    report.opt = opt;
    for (int u = 0; u < inst.host.n(); ++u) {
        int mask = multi.mask[u];
        if (mask == 0) continue;
        if ((mask & (mask - 1)) != 0)
            fail_invalid("solve_via_prime_reduction: optimum used a non-singleton subset");
        int v = 0;
        while (!(mask >> v & 1)) ++v;
        report.solution.color[u] = v;
    }
    return report;
}

// ---------------------------------------------------------------------------
// Bull-free pipelines.

inline SolveReport solve_bullfree_c5free(const Instance& inst, const SolverConfig& cfg);
inline SolveReport solve_bullfree(const Instance& inst, const SolverConfig& cfg);

// Prime {P6, C5, S_t, bull}-free hosts: anchored branching with s = 3; the
// first side recurses with a smaller pattern, the second side must come out
// P4-free and is handed to the cotree solver.
inline SolveReport solve_bullfree_c5free_prime(const Instance& inst, const SolverConfig& cfg) {
    validate_instance(inst);
    require_irreflexive(inst, "solve_bullfree_c5free_prime");
    SolveReport report;
    report.solution = PartialColoring(inst.host.n());
    if (inst.pattern.k() == 0 || inst.host.n() == 0) return report;
    if (cfg.check_classes &&
        (!is_prime(inst.host) || !is_pt_free(inst.host, 6) || !is_c5_free(inst.host) ||
         !is_st_free(inst.host, cfg.t) || !is_bull_free(inst.host)))
        fail_class("solve_bullfree_c5free_prime: host outside the promised class");
    if (inst.host.n() <= cfg.oracle_fallback_n) {
        SolverStats stats;
        SolveReport r = detail::oracle_report(inst, cfg, stats);
        r.stats = stats;
        return r;
    }
    if (!inst.rev.has_positive()) return report;

    bool first = true;
    SolveReport best;
    branch_full_stream(inst, /*s=*/3, cfg.t, cfg.branch_options(), [&](const BranchPair& pair) {
        if (auto p4 = contains_induced(pair.inst2.host, make_path(4))) {
            std::string msg =
                "solve_bullfree_c5free_prime: structure violation, second branch side has an "
                "induced P4 on vertices";
            for (int v : *p4) msg += " " + std::to_string(pair.map2[v]);
            msg += " (host was not a prime {P6,C5,St,bull}-free graph)";
            fail_class(msg);
        }
        SolveReport r1 = solve_bullfree_c5free(pair.inst1, cfg);
        SolveReport r2 = solve_cograph(pair.inst2, cfg.cograph_color_cap);
        double total = r1.opt + r2.opt;
        if (first || total > best.opt) {
            best.opt = total;
            best.solution = combine_branch_solutions(pair, inst.host.n(), r1.solution, r2.solution);
            first = false;
        }
    });
    if (first) fail_class("solve_bullfree_c5free_prime: branching produced no pairs");
    best.stats = report.stats;
    return best;
}

// General {P6, C5, S_t, bull}-free hosts via the prime reduction.
inline SolveReport solve_bullfree_c5free(const Instance& inst, const SolverConfig& cfg) {
    return solve_via_prime_reduction(
        inst,
        [&cfg](const Instance& prime_inst) { return solve_bullfree_c5free_prime(prime_inst, cfg); },
        cfg.pattern_cap);
}

// Prime {P6, S_t, bull}-free hosts: as above, except the second side must be
// C5-free and continues through the C5-free pipeline.
inline SolveReport solve_bullfree_prime(const Instance& inst, const SolverConfig& cfg) {
    validate_instance(inst);
    require_irreflexive(inst, "solve_bullfree_prime");
    SolveReport report;
    report.solution = PartialColoring(inst.host.n());
    if (inst.pattern.k() == 0 || inst.host.n() == 0) return report;
    if (cfg.check_classes &&
        (!is_prime(inst.host) || !is_pt_free(inst.host, 6) || !is_st_free(inst.host, cfg.t) ||
         !is_bull_free(inst.host)))
        fail_class("solve_bullfree_prime: host outside the promised class");
    if (inst.host.n() <= cfg.oracle_fallback_n) {
        SolverStats stats;
        SolveReport r = detail::oracle_report(inst, cfg, stats);
        r.stats = stats;
        return r;
    }
    if (!inst.rev.has_positive()) return report;

    bool first = true;
    SolveReport best;
    branch_full_stream(inst, /*s=*/3, cfg.t, cfg.branch_options(), [&](const BranchPair& pair) {
        if (auto c5 = contains_induced(pair.inst2.host, make_cycle(5))) {
            std::string msg = "solve_bullfree_prime: structure violation, second branch side has "
                              "an induced C5 on vertices";
            for (int v : *c5) msg += " " + std::to_string(pair.map2[v]);
            msg += " (host was not a prime {P6,St,bull}-free graph)";
            fail_class(msg);
        }
        SolveReport r1 = solve_bullfree(pair.inst1, cfg);
        SolveReport r2 = solve_bullfree_c5free(pair.inst2, cfg);
        double total = r1.opt + r2.opt;
        if (first || total > best.opt) {
            best.opt = total;
            best.solution = combine_branch_solutions(pair, inst.host.n(), r1.solution, r2.solution);
            first = false;
        }
    });
    if (first) fail_class("solve_bullfree_prime: branching produced no pairs");
    best.stats = report.stats;
    return best;
}

// General {P6, S_t, bull}-free hosts; covers {P5, bull}-free graphs at t = 2.
inline SolveReport solve_bullfree(const Instance& inst, const SolverConfig& cfg) {
    return solve_via_prime_reduction(
        inst, [&cfg](const Instance& prime_inst) { return solve_bullfree_prime(prime_inst, cfg); },
        cfg.pattern_cap);
}

}  // namespace hcolor
