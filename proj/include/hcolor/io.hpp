#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hcolor/hardness.hpp"
#include "hcolor/model.hpp"
#include "hcolor/modular.hpp"
#include "hcolor/solvers.hpp"

namespace hcolor {

using json = nlohmann::json;

// Graph object: {"n": int, "edges": [[u,v],...], "loops": [v,...]};
// edges unordered, no duplicates. Output is sorted for determinism.
inline json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.has_edge(u, v)) edges.push_back({u, v});
    json loops = json::array();
    for (int v = 0; v < g.n(); ++v)
        if (g.has_loop(v)) loops.push_back(v);
    return json{{"n", g.n()}, {"edges", edges}, {"loops", loops}};
}

inline Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        fail_invalid("graph JSON: missing integer field 'n'");
    int n = j["n"].get<int>();
    if (n < 0) fail_invalid("graph JSON: negative vertex count");
    Graph g(n);
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) fail_invalid("graph JSON: 'edges' must be an array");
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer())
                fail_invalid("graph JSON: each edge must be a pair of vertex ids");
            int u = e[0].get<int>(), v = e[1].get<int>();
            if (u < 0 || u >= n || v < 0 || v >= n)
                fail_invalid("graph JSON: edge endpoint out of range");
            if (u == v) fail_invalid("graph JSON: self-edges belong in 'loops'");
            if (g.has_edge(u, v)) fail_invalid("graph JSON: duplicate edge");
            g.add_edge(u, v);
        }
    }
    if (j.contains("loops")) {
        if (!j["loops"].is_array()) fail_invalid("graph JSON: 'loops' must be an array");
        for (const auto& l : j["loops"]) {
            if (!l.is_number_integer()) fail_invalid("graph JSON: loop entries are vertex ids");
            int v = l.get<int>();
            if (v < 0 || v >= n) fail_invalid("graph JSON: loop vertex out of range");
            g.add_loop(v);
        }
    }
    return g;
}

// Instance object: {"graph": Graph, "pattern": Graph, "revenue": [[k reals] x n]}.
inline json instance_to_json(const Instance& inst) {
    return json{{"graph", graph_to_json(inst.host)},
                {"pattern", graph_to_json(inst.pattern.graph)},
                {"revenue", inst.rev.value}};
}

inline Instance instance_from_json(const json& j) {
    if (!j.is_object() || !j.contains("graph") || !j.contains("pattern") ||
        !j.contains("revenue"))
        fail_invalid("instance JSON: need 'graph', 'pattern', and 'revenue'");
    Instance inst;
    inst.host = graph_from_json(j["graph"]);
    Graph pattern = graph_from_json(j["pattern"]);
    bool reflexive = pattern.has_any_loop();
    inst.pattern = make_pattern(std::move(pattern), reflexive);
    if (!j["revenue"].is_array() || static_cast<int>(j["revenue"].size()) != inst.host.n())
        fail_invalid("instance JSON: revenue needs one row per host vertex");
    inst.rev = RevenueTable(inst.host.n(), inst.pattern.k());
    for (int u = 0; u < inst.host.n(); ++u) {
        const auto& row = j["revenue"][u];
        if (!row.is_array() || static_cast<int>(row.size()) != inst.pattern.k())
            fail_invalid("instance JSON: revenue row length must match the pattern size");
        for (int v = 0; v < inst.pattern.k(); ++v) {
            if (!row[v].is_number()) fail_invalid("instance JSON: revenues must be numbers");
            inst.rev.value[u][v] = row[v].get<double>();
        }
    }
    validate_instance(inst);
    return inst;
}

// List instance object: {"graph": Graph, "pattern": "H0" | Graph, "lists": [[colors],...]}.
inline json list_instance_to_json(const ListInstance& li, bool h0_pattern = true) {
    json j{{"graph", graph_to_json(li.graph)}, {"lists", li.lists}};
    if (h0_pattern)
        j["pattern"] = "H0";
    else
        fail_invalid("list_instance_to_json: only the H0 pattern is exported");
    return j;
}

struct ParsedListInstance {
    ListInstance list;
    PatternGraph pattern;
};

inline ParsedListInstance list_instance_from_json(const json& j) {
    if (!j.is_object() || !j.contains("graph") || !j.contains("pattern") || !j.contains("lists"))
        fail_invalid("list instance JSON: need 'graph', 'pattern', and 'lists'");
    ParsedListInstance out;
    out.list.graph = graph_from_json(j["graph"]);
    if (j["pattern"].is_string()) {
        if (j["pattern"].get<std::string>() != "H0")
            fail_invalid("list instance JSON: unknown named pattern");
        out.pattern = build_h0().pattern;
    } else {
        Graph pg = graph_from_json(j["pattern"]);
        bool reflexive = pg.has_any_loop();
        out.pattern = make_pattern(std::move(pg), reflexive);
    }
    if (!j["lists"].is_array() || static_cast<int>(j["lists"].size()) != out.list.graph.n())
        fail_invalid("list instance JSON: one list per vertex required");
    out.list.lists.resize(out.list.graph.n());
    for (int u = 0; u < out.list.graph.n(); ++u) {
        for (const auto& c : j["lists"][u]) {
            if (!c.is_number_integer()) fail_invalid("list instance JSON: colors are ids");
            int v = c.get<int>();
            if (v < 0 || v >= out.pattern.k())
                fail_invalid("list instance JSON: color id out of range");
            out.list.lists[u].push_back(v);
        }
    }
    return out;
}

inline json report_to_json(const SolveReport& report) {
    json assignment = json::array();
    for (auto [u, v] : report.solution.assignments()) assignment.push_back({u, v});
    return json{{"opt", report.opt},
                {"assignment", assignment},
                {"stats",
                 {{"max_depth", report.stats.max_depth},
                  {"branch_nodes", report.stats.branch_nodes},
                  {"oracle_fallbacks", report.stats.oracle_fallbacks},
                  {"guesses", report.stats.guesses},
                  {"omega_violations", report.stats.omega_violations},
                  {"inner_calls", report.stats.inner_calls},
                  {"clique_branches", report.stats.clique_branches}}}};
}

inline json decomposition_to_json(const ModularDecompositionTree& tree) {
    json nodes = json::array();
    for (const auto& node : tree.nodes) {
        const char* kind = node.kind == QuotientKind::edgeless  ? "edgeless"
                         : node.kind == QuotientKind::complete  ? "complete"
                         : node.kind == QuotientKind::prime     ? "prime"
                                                                : "leaf";
        nodes.push_back(json{{"vertices", node.vertices},
                             {"children", node.children},
                             {"quotient_kind", kind}});
    }
    return json{{"root", tree.root}, {"nodes", nodes}};
}

}  // namespace hcolor
