#pragma once

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "hcolor/branching.hpp"
#include "hcolor/model.hpp"
#include "hcolor/oracle.hpp"
#include "hcolor/recognize.hpp"

namespace hcolor {

struct SolverStats {
    int max_depth = 0;
    long long branch_nodes = 0;
    long long oracle_fallbacks = 0;
    long long guesses = 0;
    long long omega_violations = 0;
    long long inner_calls = 0;      // subexponential wrapper: delegations
    long long clique_branches = 0;  // subexponential wrapper: clique splits
};

struct SolveReport {
    double opt = 0.0;
    PartialColoring solution;
    SolverStats stats;
};

struct SolverConfig {
    int s = 3;
    int t = 2;
    int oracle_fallback_n = 4;   // hosts this small go straight to the oracle
    long long guess_cap = 50'000'000;
    int pattern_cap = 64;        // max colors after a power-pattern expansion
    int cograph_color_cap = 16;  // join DP costs 3^k per node
    int threads = 1;
    bool check_classes = false;          // eagerly verify class preconditions
    bool verify_omega_progress = false;  // track clique-number decrease per branch

    enum class ThresholdBase { edgeless_chain, cograph_chain };
    ThresholdBase threshold_base = ThresholdBase::edgeless_chain;

    OracleLimits oracle;

    BranchOptions branch_options() const {
        BranchOptions opts;
        opts.guess_cap = guess_cap;
        return opts;
    }
};

namespace detail {

inline void bump_depth(SolverStats& stats, int depth) {
    stats.max_depth = std::max(stats.max_depth, depth);
}

inline SolveReport oracle_report(const Instance& inst, const SolverConfig& cfg,
                                 SolverStats& stats) {
    ++stats.oracle_fallbacks;
    auto [opt, phi] = oracle_solve(inst, cfg.oracle);
    SolveReport report;
    report.opt = opt;
    report.solution = phi;
    return report;
}

template <class Solve>
SolveReport solve_per_component(const Instance& inst, Solve solve) {
    SolveReport merged;
    merged.solution = PartialColoring(inst.host.n());
    std::vector<int> all_colors(inst.pattern.k());
    std::iota(all_colors.begin(), all_colors.end(), 0);
    for (const VertexSet& comp : components(inst.host)) {
        auto sub = induced_subgraph(inst.host, comp);
        Instance child{sub.graph, inst.pattern, restrict_table(inst.rev, sub.to_old, all_colors)};
        SolveReport part = solve(child);
        merged.opt += part.opt;
        for (std::size_t u = 0; u < sub.to_old.size(); ++u)
            merged.solution.color[sub.to_old[u]] = part.solution.color[u];
    }
    return merged;
}

inline SolveReport solve_single_vertex(const Instance& inst) {
    SolveReport report;
    report.solution = PartialColoring(1);
    for (int v = 0; v < inst.pattern.k(); ++v)
        if (inst.rev.at(0, v) > report.opt) {
            report.opt = inst.rev.at(0, v);
            report.solution.color[0] = v;
        }
    return report;
}

inline SolveReport solve_recursive_impl(const Instance& inst, const SolverConfig& cfg,
                                        SolverStats& stats, int depth) {
    bump_depth(stats, depth);
    if (!is_connected(inst.host))
        return solve_per_component(inst, [&](const Instance& child) {
            return solve_recursive_impl(child, cfg, stats, depth + 1);
        });
    if (inst.host.n() == 1) return solve_single_vertex(inst);
    if (inst.host.n() <= cfg.oracle_fallback_n) return oracle_report(inst, cfg, stats);
    if (cfg.check_classes &&
        (!is_pt_free(inst.host, 6) || !is_lt_free(inst.host, cfg.s) ||
         !is_st_free(inst.host, cfg.t)))
        fail_class("solve_recursive: host outside the promised class");

    ++stats.branch_nodes;
    SimplifiedBranch branch = prepare_simplified_branch(inst);
    if (cfg.verify_omega_progress && inst.host.edge_count() > 0 &&
        clique_number(branch.stripped) >= clique_number(inst.host))
        ++stats.omega_violations;

    bool first = true;
    SolveReport best;
    stats.guesses += stream_simplified_revenues(
        inst, branch, cfg.s, cfg.t, cfg.branch_options(), [&](RevenueTable rev_prime) {
            Instance child{branch.stripped, inst.pattern, std::move(rev_prime)};
            SolveReport sub = solve_recursive_impl(child, cfg, stats, depth + 1);
            if (first || sub.opt > best.opt) {
                best.opt = sub.opt;
                best.solution = std::move(sub.solution);
                first = false;
            }
        });
    if (first) fail_class("solve_recursive: branching produced no guesses");
    return best;
}

}  // namespace detail

// Exact solver for {P6, L_s, S_t}-free hosts (covers P5-free via s=3, t=2).
inline SolveReport solve_recursive(const Instance& inst, const SolverConfig& cfg = {}) {
    validate_instance(inst);
    require_irreflexive(inst, "solve_recursive");
    SolverStats stats;
    SolveReport report = detail::solve_recursive_impl(inst, cfg, stats, 1);
    report.stats = stats;
    return report;
}

// ---------------------------------------------------------------------------
// Subexponential wrapper around the recursive solver.

// Largest integer tau with tau^(alpha+1) <= n, i.e. floor(n^(1/(alpha+1))).
inline int subexp_threshold(int n, int alpha) {
    if (alpha < 1) fail_invalid("subexp_threshold: need alpha >= 1");
    if (n < 0) fail_invalid("subexp_threshold: need n >= 0");
    int tau = 0;
    while (true) {
        long long power = 1;
        bool overflow = false;
        for (int i = 0; i < alpha + 1; ++i) {
            power *= (tau + 1);
            if (power > n) {
                overflow = true;
                break;
            }
        }
        if (overflow) break;
        ++tau;
    }
    return tau;
}

namespace detail {

inline SolveReport solve_subexponential_impl(const Instance& inst, const SolverConfig& cfg,
                                             int alpha, SolverStats& stats, int depth) {
    bump_depth(stats, depth);
    int n = inst.host.n();
    int tau = subexp_threshold(n, alpha);
    if (tau <= inst.pattern.k()) {
        // Constant-sized regime: solve directly.
        if (n <= cfg.oracle.max_n) return oracle_report(inst, cfg, stats);
        ++stats.inner_calls;
        return solve_recursive(inst, cfg);
    }
    auto clique = find_clique_of_size(inst.host, tau);
    if (!clique) {
        ++stats.inner_calls;
        return solve_recursive(inst, cfg);
    }
    ++stats.clique_branches;

    // At most |V(H)| clique vertices can be colored; keep each candidate
    // subset A and drop the rest of the clique.
    std::vector<int> all_colors(inst.pattern.k());
    std::iota(all_colors.begin(), all_colors.end(), 0);
    SolveReport best;
    bool first = true;
    int limit = std::min<int>(inst.pattern.k(), static_cast<int>(clique->size()));

    std::vector<int> pick;
    auto consider = [&]() {
        VertexSet removed;
        std::vector<bool> keep(n, true);
        for (std::size_t i = 0; i < clique->size(); ++i)
            if (std::find(pick.begin(), pick.end(), static_cast<int>(i)) == pick.end())
                keep[(*clique)[i]] = false;
        VertexSet kept;
        for (int v = 0; v < n; ++v)
            if (keep[v]) kept.push_back(v);
        auto sub = induced_subgraph(inst.host, kept);
        Instance child{sub.graph, inst.pattern, restrict_table(inst.rev, sub.to_old, all_colors)};
        SolveReport part = solve_subexponential_impl(child, cfg, alpha, stats, depth + 1);
        if (first || part.opt > best.opt) {
            best.opt = part.opt;
            best.solution = PartialColoring(n);
            for (std::size_t u = 0; u < sub.to_old.size(); ++u)
                best.solution.color[sub.to_old[u]] = part.solution.color[u];
            first = false;
        }
    };
    auto rec = [&](auto&& self, int from, int remaining) -> void {
        consider();
        if (remaining == 0) return;
        for (int i = from; i < static_cast<int>(clique->size()); ++i) {
            pick.push_back(i);
            self(self, i + 1, remaining - 1);
            pick.pop_back();
        }
    };
    // Enumerate subsets A of K with |A| <= |V(H)| by growing prefixes;
    // consider() fires once per distinct subset.
    pick.clear();
    rec(rec, 0, limit);
    return best;
}

}  // namespace detail

inline SolveReport solve_subexponential(const Instance& inst, const SolverConfig& cfg, int alpha) {
    validate_instance(inst);
    require_irreflexive(inst, "solve_subexponential");
    SolverStats stats;
    SolveReport report = detail::solve_subexponential_impl(inst, cfg, alpha, stats, 1);
    report.stats = stats;
    return report;
}

// ---------------------------------------------------------------------------
// Cograph solver: dynamic programming over the cotree with one table entry
// per (node, color subset); the join rule pairs disjoint subsets that are
// complete to each other in the pattern.

namespace detail {

struct CotreeNode {
    enum class Kind { leaf, disjoint_union, join };
    Kind kind = Kind::leaf;
    int vertex = -1;
    std::vector<int> children;
};

struct Cotree {
    std::vector<CotreeNode> nodes;
    int root = -1;
};

inline int build_cotree(const Graph& g, const VertexSet& verts, Cotree& tree) {
    if (verts.size() == 1) {
        tree.nodes.push_back({CotreeNode::Kind::leaf, verts[0], {}});
        return static_cast<int>(tree.nodes.size()) - 1;
    }
    auto comps = components_within(g, verts);
    if (comps.size() > 1) {
        CotreeNode node{CotreeNode::Kind::disjoint_union, -1, {}};
        for (const VertexSet& c : comps) node.children.push_back(build_cotree(g, c, tree));
        tree.nodes.push_back(std::move(node));
        return static_cast<int>(tree.nodes.size()) - 1;
    }
    auto cocomps = co_components_within(g, verts);
    if (cocomps.size() > 1) {
        CotreeNode node{CotreeNode::Kind::join, -1, {}};
        for (const VertexSet& c : cocomps) node.children.push_back(build_cotree(g, c, tree));
        tree.nodes.push_back(std::move(node));
        return static_cast<int>(tree.nodes.size()) - 1;
    }
    auto witness = contains_induced(g, make_path(4));
    std::string msg = "solve_cograph: host is not a cograph";
    if (witness) {
        msg += " (induced P4 on";
        for (int v : *witness) msg += " " + std::to_string(v);
        msg += ")";
    }
    fail_class(msg);
}

// Per-mask table combiner for a join: both sides use disjoint color sets
// complete to each other in the pattern.
struct JoinTables {
    int k;
    std::vector<int> complete_to;     // colors complete to every color of mask
    std::vector<double> best_subset;  // scratch: max over submasks

    explicit JoinTables(const PatternGraph& h) : k(h.k()), complete_to(complete_to_table(h)) {}

    std::vector<double> combine(const std::vector<double>& left,
                                const std::vector<double>& right) {
        int full = 1 << k;
        // best_subset[m] = max over submasks s of m of right[s]
        best_subset = right;
        for (int bit = 0; bit < k; ++bit)
            for (int m = 0; m < full; ++m)
                if (m >> bit & 1)
                    best_subset[m] = std::max(best_subset[m], best_subset[m ^ (1 << bit)]);
        std::vector<double> out(full, 0.0);
        for (int w = 0; w < full; ++w) {
            double best = 0.0;
            // Iterate w1 over submasks of w.
            int w1 = w;
            while (true) {
                double value = left[w1] + best_subset[(w & ~w1) & complete_to[w1]];
                best = std::max(best, value);
                if (w1 == 0) break;
                w1 = (w1 - 1) & w;
            }
            out[w] = best;
        }
        return out;
    }
};

struct CographSolver {
    const Instance& inst;
    Cotree tree;
    JoinTables join;
    std::vector<std::vector<double>> table;  // table[node][mask]

    explicit CographSolver(const Instance& inst_) : inst(inst_), join(inst_.pattern) {}

    std::vector<double> leaf_table(int u) const {
        int full = 1 << inst.pattern.k();
        std::vector<double> out(full, 0.0);
        for (int mask = 0; mask < full; ++mask) {
            double best = 0.0;
            for (int v = 0; v < inst.pattern.k(); ++v)
                if (mask >> v & 1) best = std::max(best, inst.rev.at(u, v));
            out[mask] = best;
        }
        return out;
    }

    void fill(int node) {
        const CotreeNode& cn = tree.nodes[node];
        if (cn.kind == CotreeNode::Kind::leaf) {
            table[node] = leaf_table(cn.vertex);
            return;
        }
        for (int child : cn.children) fill(child);
        std::vector<double> acc = table[cn.children[0]];
        for (std::size_t i = 1; i < cn.children.size(); ++i) {
            const auto& next = table[cn.children[i]];
            if (cn.kind == CotreeNode::Kind::disjoint_union) {
                for (std::size_t m = 0; m < acc.size(); ++m) acc[m] += next[m];
            } else {
                acc = join.combine(acc, next);
            }
        }
        table[node] = std::move(acc);
    }

    void assign(int node, int mask, PartialColoring& phi) {
        const CotreeNode& cn = tree.nodes[node];
        if (cn.kind == CotreeNode::Kind::leaf) {
            int best = -1;
            double best_value = 0.0;
            for (int v = 0; v < inst.pattern.k(); ++v)
                if ((mask >> v & 1) && inst.rev.at(cn.vertex, v) > best_value) {
                    best_value = inst.rev.at(cn.vertex, v);
                    best = v;
                }
            phi.color[cn.vertex] = best;
            return;
        }
        if (cn.kind == CotreeNode::Kind::disjoint_union) {
            for (int child : cn.children) assign(child, mask, phi);
            return;
        }
        // Rebuild the left-fold prefixes, then peel children off the back.
        std::vector<std::vector<double>> prefix(cn.children.size());
        prefix[0] = table[cn.children[0]];
        for (std::size_t i = 1; i < cn.children.size(); ++i)
            prefix[i] = join.combine(prefix[i - 1], table[cn.children[i]]);
        int current = mask;
        for (std::size_t i = cn.children.size(); i-- > 1;) {
            const auto& left = prefix[i - 1];
            const auto& right = table[cn.children[i]];
            int best_w1 = current, best_w2 = 0;
            double best_value = -1.0;
            int w1 = current;
            while (true) {
                int allowed = (current & ~w1) & join.complete_to[w1];
                // Best submask of `allowed` for the right table, found by scan.
                int w2 = allowed;
                while (true) {
                    double value = left[w1] + right[w2];
                    if (value > best_value) {
                        best_value = value;
                        best_w1 = w1;
                        best_w2 = w2;
                    }
                    if (w2 == 0) break;
                    w2 = (w2 - 1) & allowed;
                }
                if (w1 == 0) break;
                w1 = (w1 - 1) & current;
            }
            assign(cn.children[i], best_w2, phi);
            current = best_w1;
        }
        assign(cn.children[0], current, phi);
    }
};

}  // namespace detail

inline SolveReport solve_cograph(const Instance& inst, int color_cap = 16) {
    validate_instance(inst);
    require_irreflexive(inst, "solve_cograph");
    if (inst.pattern.k() > color_cap) fail_cap("solve_cograph: pattern exceeds the color cap");
    SolveReport report;
    report.solution = PartialColoring(inst.host.n());
    if (inst.host.n() == 0) return report;

    detail::CographSolver solver(inst);
    solver.tree.root = detail::build_cotree(inst.host, inst.host.all_vertices(), solver.tree);
    solver.table.assign(solver.tree.nodes.size(), {});
    solver.fill(solver.tree.root);
    int full = (1 << inst.pattern.k()) - 1;
    report.opt = solver.table[solver.tree.root][full];
    solver.assign(solver.tree.root, full, report.solution);
    return report;
}

// ---------------------------------------------------------------------------
// Threshold-exclusion solver: nested induction, outer level unfolding one
// universal-plus-pendant extension per step, inner level shrinking the
// pattern by one color per anchored branch.

namespace detail {

// F at induction level j is the half-graph Q_j (edgeless chain) or the j-th
// universal-plus-pendant extension of P4 (cograph chain).
inline Graph threshold_chain_graph(SolverConfig::ThresholdBase base, int level) {
    if (base == SolverConfig::ThresholdBase::edgeless_chain) return make_half_graph(level);
    Graph f = make_path(4);
    for (int i = 0; i < level; ++i) f = with_universal_and_pendant(f);
    return f;
}

inline SolveReport solve_threshold_impl(const Instance& inst, const SolverConfig& cfg, int level,
                                        SolverStats& stats, int depth) {
    bump_depth(stats, depth);
    SolveReport report;
    report.solution = PartialColoring(inst.host.n());
    if (inst.pattern.k() == 0) return report;

    bool at_base = cfg.threshold_base == SolverConfig::ThresholdBase::edgeless_chain ? level <= 1
                                                                                     : level <= 0;
    if (at_base) {
        if (cfg.threshold_base == SolverConfig::ThresholdBase::edgeless_chain) {
            auto [opt, phi] = solve_edgeless(inst);
            report.opt = opt;
            report.solution = phi;
            return report;
        }
        return solve_cograph(inst, cfg.cograph_color_cap);
    }

    if (!is_connected(inst.host))
        return solve_per_component(inst, [&](const Instance& child) {
            return solve_threshold_impl(child, cfg, level, stats, depth + 1);
        });
    if (inst.host.n() <= cfg.oracle_fallback_n) return oracle_report(inst, cfg, stats);
    if (!inst.rev.has_positive()) return report;

    ++stats.branch_nodes;
    Graph prev_chain =
        cfg.check_classes ? threshold_chain_graph(cfg.threshold_base, level - 1) : Graph();
    bool first = true;
    SolveReport best;
    BranchStats bstats = branch_full_stream(
        inst, cfg.s, cfg.t, cfg.branch_options(), [&](const BranchPair& pair) {
            if (cfg.check_classes && contains_induced(pair.inst2.host, prev_chain))
                fail_class("solve_threshold_excluded: second side not free of the previous "
                           "chain graph (host outside the promised class)");
            SolveReport r1 = solve_threshold_impl(pair.inst1, cfg, level, stats, depth + 1);
            SolveReport r2 = solve_threshold_impl(pair.inst2, cfg, level - 1, stats, depth + 1);
            double total = r1.opt + r2.opt;
            if (first || total > best.opt) {
                best.opt = total;
                best.solution =
                    combine_branch_solutions(pair, inst.host.n(), r1.solution, r2.solution);
                first = false;
            }
        });
    stats.guesses += bstats.guesses;
    if (first) fail_class("solve_threshold_excluded: branching produced no pairs");
    return best;
}

}  // namespace detail

// Exact solver for {P6, L_s, S_t, F}-free hosts where F is the k-th graph of
// the chosen extension chain: half-graphs (base: edgeless hosts) or repeated
// universal-plus-pendant extensions of P4 (base: cographs).
inline SolveReport solve_threshold_excluded(const Instance& inst, const SolverConfig& cfg, int k) {
    validate_instance(inst);
    require_irreflexive(inst, "solve_threshold_excluded");
    int min_k = cfg.threshold_base == SolverConfig::ThresholdBase::edgeless_chain ? 1 : 0;
    if (k < min_k) fail_invalid("solve_threshold_excluded: chain level too small");
    SolverStats stats;
    SolveReport report = detail::solve_threshold_impl(inst, cfg, k, stats, 1);
    report.stats = stats;
    return report;
}

}  // namespace hcolor
