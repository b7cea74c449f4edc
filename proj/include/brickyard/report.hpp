#pragma once

// JSON views of the analysis results. Keys are emitted in sorted order
// (nlohmann's default object), which keeps reports byte-stable across runs.

#include <json.hpp>

#include "brickyard/theorems.hpp"

namespace brickyard {

using json = nlohmann::json;

inline json to_json(const TheoremVerdict& v) {
    json j{
        {"hypothesis_holds", v.hypothesis_holds},
        {"delta", v.delta},
        {"bound", v.bound},
    };
    if (!v.graph_id.empty()) j["graph_id"] = v.graph_id;
    json fails = json::array();
    for (auto f : v.hypothesis_failures) fails.push_back(to_string(f));
    j["hypothesis_failures"] = fails;
    j["removable_count"] = v.removable_count ? json(*v.removable_count) : json(nullptr);
    j["satisfied"] = v.satisfied ? json(*v.satisfied) : json(nullptr);
    return j;
}

inline json to_json(const LemmaReport& r) {
    json viols = json::array();
    for (const auto& v : r.violations)
        viols.push_back({{"graph", v.graph_sparse6}, {"detail", v.detail}});
    return json{{"lemma", to_string(r.id)},
                {"instances_checked", r.instances_checked},
                {"violations", viols}};
}

inline json to_json(const GraphClass& c) {
    return json{{"matching_covered", c.matching_covered},
                {"brick", c.brick},
                {"brace", c.brace},
                {"near_brick", c.near_brick},
                {"irreducible", c.irreducible},
                {"bipartite", c.bipartite}};
}

inline json decomposition_to_json(const DecompositionNode& node) {
    json j{{"n", node.graph.vertex_count()}, {"m", node.graph.edge_count()}};
    if (node.leaf_kind != DecompositionNode::Leaf::none) {
        j["leaf"] = node.leaf_kind == DecompositionNode::Leaf::brick ? "brick" : "brace";
        return j;
    }
    j["shore"] = node.split->shore.to_vector();
    json kids = json::array();
    for (const auto& child : node.children) kids.push_back(decomposition_to_json(child));
    j["children"] = kids;
    return j;
}

// The full per-graph report the analyze subcommand emits. Everything in it
// is re-derivable from the graph alone.
inline json analysis_report(const std::string& input_id, const MultiGraph& g,
                            int max_n = kDefaultMaxN) {
    json j{{"input_id", input_id},
           {"n", g.vertex_count()},
           {"m", g.edge_count()}};
    j["delta"] = g.vertex_count() > 0 ? max_degree(g) : 0;
    const GraphClass cls = classify(g, max_n);
    j["class"] = to_json(cls);

    if (cls.matching_covered) {
        auto re = removable_edges(g, max_n);
        json edges = json::array();
        for (EdgeId e : re.edges) {
            auto [u, v] = g.edges()[static_cast<std::size_t>(e)];
            int copy = 0;
            for (EdgeId f = 0; f < e; ++f) {
                auto [a, b] = g.edges()[static_cast<std::size_t>(f)];
                if (std::minmax(a, b) == std::minmax(u, v)) ++copy;
            }
            edges.push_back({{"u", u}, {"v", v}, {"copy", copy}, {"edge", e}});
        }
        j["removable_edges"] = edges;
        j["b"] = brick_count(g, max_n);
        j["decomposition"] = decomposition_to_json(tight_cut_decomposition(g, max_n));
    } else {
        j["removable_edges"] = json(nullptr);
        j["b"] = json(nullptr);
        j["decomposition"] = json(nullptr);
    }
    j["theorem2"] = to_json(verify_theorem2(g, max_n, input_id));
    return j;
}

// Graphviz view of the decomposition tree, one node per decomposition step.
inline std::string decomposition_to_dot(const DecompositionNode& root) {
    std::string out = "digraph decomposition {\n  node [shape=box];\n";
    int counter = 0;
    auto emit = [&](auto&& self, const DecompositionNode& node) -> int {
        const int id = counter++;
        std::string label = "n=" + std::to_string(node.graph.vertex_count()) +
                            " m=" + std::to_string(node.graph.edge_count());
        if (node.leaf_kind == DecompositionNode::Leaf::brick) label += "\\nbrick";
        if (node.leaf_kind == DecompositionNode::Leaf::brace) label += "\\nbrace";
        out += "  v" + std::to_string(id) + " [label=\"" + label + "\"];\n";
        for (const auto& child : node.children) {
            const int cid = self(self, child);
            out += "  v" + std::to_string(id) + " -> v" + std::to_string(cid) + ";\n";
        }
        return id;
    };
    emit(emit, root);
    out += "}\n";
    return out;
}

}  // namespace brickyard
