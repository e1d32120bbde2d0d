#pragma once

#include <utility>
#include <vector>

#include "hcolor/model.hpp"

namespace hcolor {

// Size caps for the brute-force oracles. Configuration rather than constants
// so acceptance suites can tighten them.
struct OracleLimits {
    int max_n = 12;            // oracle_solve host cap
    int multicolor_max_n = 10; // oracle_solve_multicolor host cap
    int multicolor_max_k = 3;  // oracle_solve_multicolor pattern cap
    int list_max_n = 64;       // list-homomorphism / 3-coloring host cap
};

namespace detail {

struct OracleSearch {
    const Instance& inst;
    std::vector<double> suffix_gain;  // optimistic total from vertex u onward
    PartialColoring current;
    double current_revenue = 0.0;
    double best_revenue = 0.0;
    PartialColoring best;

    explicit OracleSearch(const Instance& inst_) : inst(inst_), current(inst_.host.n()), best(inst_.host.n()) {
        int n = inst.host.n();
        suffix_gain.assign(n + 1, 0.0);
        for (int u = n - 1; u >= 0; --u) {
            double gain = 0.0;
            for (int v = 0; v < inst.pattern.k(); ++v)
                gain = std::max(gain, inst.rev.at(u, v));
            suffix_gain[u] = suffix_gain[u + 1] + std::max(0.0, gain);
        }
    }

    void consider_leaf() {
        if (current_revenue > best_revenue ||
            (current_revenue == best_revenue && lex_less(current, best))) {
            best_revenue = current_revenue;
            best = current;
        }
    }

    // Vertices in ascending order, "uncolored" option first, then colors in
    // ascending order. Negative-revenue assignments are never tried: an
    // optimum never uses them. The optimistic-bound prune is strict, so it
    // cannot change the returned OPT, and the lexicographic tie-break stays
    // reachable.
    void run(int u) {
        if (u == inst.host.n()) {
            consider_leaf();
            return;
        }
        if (current_revenue + suffix_gain[u] < best_revenue) return;
        current.color[u] = -1;
        run(u + 1);
        for (int c = 0; c < inst.pattern.k(); ++c) {
            if (inst.rev.at(u, c) < 0) continue;
            bool ok = true;
            for (int w = 0; w < u && ok; ++w)
                if (current.color[w] >= 0 && inst.host.has_edge(u, w))
                    ok = inst.pattern.edge(c, current.color[w]);
            if (!ok) continue;
            current.color[u] = c;
            current_revenue += inst.rev.at(u, c);
            run(u + 1);
            current_revenue -= inst.rev.at(u, c);
        }
        current.color[u] = -1;
    }
};

}  // namespace detail

// Exact maximum over all partial colorings, by enumeration. The ground truth
// every other solver is validated against; its value is its obviousness.
inline std::pair<double, PartialColoring> oracle_solve(const Instance& inst,
                                                       const OracleLimits& limits = {}) {
    validate_instance(inst);
    require_irreflexive(inst, "oracle_solve");
    if (inst.host.n() > limits.max_n) fail_cap("oracle_solve: host exceeds the size cap");
    detail::OracleSearch search(inst);
    search.run(0);
    return {search.best_revenue, search.best};
}

inline std::pair<double, MultiColoring> oracle_solve_multicolor(const MulticolorInstance& minst,
                                                                const OracleLimits& limits = {}) {
    validate_multicolor_instance(minst);
    if (minst.host.n() > limits.multicolor_max_n)
        fail_cap("oracle_solve_multicolor: host exceeds the size cap");
    if (minst.pattern.k() > limits.multicolor_max_k)
        fail_cap("oracle_solve_multicolor: pattern exceeds the size cap");

    int n = minst.host.n();
    int subsets = minst.subset_count();
    std::vector<double> suffix_gain(n + 1, 0.0);
    for (int u = n - 1; u >= 0; --u) {
        double gain = 0.0;
        for (int m = 1; m <= subsets; ++m) gain = std::max(gain, minst.at(u, m));
        suffix_gain[u] = suffix_gain[u + 1] + std::max(0.0, gain);
    }

    MultiColoring current(n), best(n);
    double best_revenue = 0.0;

    auto rec = [&](auto&& self, int u, double revenue) -> void {
        if (u == n) {
            if (revenue > best_revenue) {
                best_revenue = revenue;
                best = current;
            }
            return;
        }
        if (revenue + suffix_gain[u] < best_revenue) return;
        current.mask[u] = 0;
        self(self, u + 1, revenue);
        for (int m = 1; m <= subsets; ++m) {
            if (minst.at(u, m) < 0) continue;
            bool ok = true;
            for (int w = 0; w < u && ok; ++w)
                if (current.mask[w] != 0 && minst.host.has_edge(u, w))
                    ok = masks_compatible(minst.pattern, m, current.mask[w]);
            if (!ok) continue;
            current.mask[u] = m;
            self(self, u + 1, revenue + minst.at(u, m));
        }
        current.mask[u] = 0;
    };
    rec(rec, 0, 0.0);
    return {best_revenue, best};
}

// Total list homomorphism satisfiability; the pattern may have loops. Plain
// exhaustive backtracking, with the most-constrained vertex expanded first.
inline bool oracle_list_hcolor(const Graph& g, const PatternGraph& h,
                               const std::vector<VertexSet>& lists,
                               const OracleLimits& limits = {}) {
    if (static_cast<int>(lists.size()) != g.n())
        fail_invalid("oracle_list_hcolor: one list per vertex required");
    if (g.n() > limits.list_max_n) fail_cap("oracle_list_hcolor: host exceeds the size cap");
    std::vector<int> color(g.n(), -1);

    auto feasible = [&](int u, VertexSet& out) {
        out.clear();
        for (int c : lists[u]) {
            if (c < 0 || c >= h.k()) fail_invalid("oracle_list_hcolor: color out of range");
            bool ok = true;
            for (int w = 0; w < g.n() && ok; ++w)
                if (color[w] >= 0 && g.has_edge(u, w)) ok = h.edge(c, color[w]);
            if (ok) out.push_back(c);
        }
    };

    auto rec = [&](auto&& self, int remaining) -> bool {
        if (remaining == 0) return true;
        int pick = -1;
        VertexSet pick_options;
        VertexSet options;
        for (int u = 0; u < g.n(); ++u) {
            if (color[u] >= 0) continue;
            feasible(u, options);
            if (options.empty()) return false;
            if (pick == -1 || options.size() < pick_options.size()) {
                pick = u;
                pick_options = options;
            }
        }
        for (int c : pick_options) {
            color[pick] = c;
            if (self(self, remaining - 1)) return true;
            color[pick] = -1;
        }
        return false;
    };
    return rec(rec, g.n());
}

inline bool oracle_3coloring(const Graph& g, const OracleLimits& limits = {}) {
    if (g.n() > limits.list_max_n) fail_cap("oracle_3coloring: host exceeds the size cap");
    std::vector<int> color(g.n(), -1);
    auto rec = [&](auto&& self, int u) -> bool {
        if (u == g.n()) return true;
        for (int c = 0; c < 3; ++c) {
            bool ok = true;
            for (int w = 0; w < u && ok; ++w)
                if (g.has_edge(u, w)) ok = (color[w] != c);
            if (!ok) continue;
            color[u] = c;
            if (self(self, u + 1)) return true;
        }
        color[u] = -1;
        return false;
    };
    return rec(rec, 0);
}

}  // namespace hcolor
