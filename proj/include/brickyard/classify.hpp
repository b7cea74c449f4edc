#pragma once

// Classification predicates and the named reference graphs. The brick test
// has two routes: the Edmonds–Lovász–Pulleyblank characterization
// (3-connected and bicritical) as the cheap primary, and the definitional
// test (matching covered, nonbipartite, no nontrivial tight cut) as the
// cross-check oracle.

#include "brickyard/tightcuts.hpp"

namespace brickyard {

struct GraphClass {
    bool matching_covered = false;
    bool brick = false;
    bool brace = false;
    bool near_brick = false;
    bool irreducible = false;
    bool bipartite = false;
};

// ELP route: 3-connected and G - x - y matchable for every vertex pair.
inline bool is_brick(const MultiGraph& g, int max_n = kDefaultMaxN) {
    const int n = g.vertex_count();
    if (n < 4 || n % 2 != 0) return false;
    if (!is_k_connected(g, 3)) return false;
    return MatchingEngine(g, max_n).is_bicritical();
}

// Definitional route, used as the oracle against is_brick.
inline bool is_brick_by_tight_cuts(const MultiGraph& g, int max_n = kDefaultMaxN) {
    if (g.vertex_count() < 2) return false;
    MatchingEngine eng(g, max_n);
    if (!eng.is_matching_covered()) return false;
    if (is_bipartite(g)) return false;
    return !detail::find_tight_shore(eng).has_value();
}

inline bool is_brace(const MultiGraph& g, int max_n = kDefaultMaxN) {
    if (g.vertex_count() < 2) return false;
    MatchingEngine eng(g, max_n);
    if (!eng.is_matching_covered()) return false;
    if (!is_bipartite(g)) return false;
    return !detail::find_tight_shore(eng).has_value();
}

// No single ear of length three or more; the chain search is the definition.
inline bool is_irreducible(const MultiGraph& g) {
    for (const auto& chain : find_single_ears(g))
        if (chain.has_long_odd_ear) return false;
    return true;
}

inline GraphClass classify(const MultiGraph& g, int max_n = kDefaultMaxN) {
    GraphClass c;
    c.bipartite = is_bipartite(g);
    c.irreducible = is_irreducible(g);
    if (g.vertex_count() < 2) return c;
    MatchingEngine eng(g, max_n);
    c.matching_covered = eng.is_matching_covered();
    if (!c.matching_covered) return c;
    const bool no_cut = !detail::find_tight_shore(eng).has_value();
    c.brick = no_cut && !c.bipartite;
    c.brace = no_cut && c.bipartite;
    c.near_brick = detail::brick_count_impl(g, max_n) == 1;
    return c;
}

// Canonical labeled constructions of the graphs the paper names.
namespace graphs {

inline MultiGraph k2() { return MultiGraph(2, {{0, 1}}); }

inline MultiGraph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need at least 3 vertices");
    MultiGraph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

inline MultiGraph c4() { return cycle(4); }
inline MultiGraph c6() { return cycle(6); }

inline MultiGraph complete(int n) {
    MultiGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline MultiGraph k4() { return complete(4); }

inline MultiGraph complement_of(const MultiGraph& g) {
    const int n = g.vertex_count();
    auto adj = detail::adjacency_bits(underlying_simple(g));
    MultiGraph out(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!((adj[static_cast<std::size_t>(u)] >> v) & 1u)) out.add_edge(u, v);
    return out;
}

inline MultiGraph c6_bar() { return complement_of(c6()); }

inline MultiGraph prism() {
    MultiGraph g(6);
    g.add_edge(0, 1); g.add_edge(1, 2); g.add_edge(2, 0);
    g.add_edge(3, 4); g.add_edge(4, 5); g.add_edge(5, 3);
    g.add_edge(0, 3); g.add_edge(1, 4); g.add_edge(2, 5);
    return g;
}

inline MultiGraph k33() {
    MultiGraph g(6);
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v) g.add_edge(u, v);
    return g;
}

inline MultiGraph petersen() {
    MultiGraph g(10);
    for (int v = 0; v < 5; ++v) {
        g.add_edge(v, (v + 1) % 5);
        g.add_edge(v, v + 5);
        g.add_edge(v + 5, 5 + (v + 2) % 5);
    }
    return g;
}

}  // namespace graphs

// Name lookup for the CLI and tests: K2, C4, C6, C<2k>, K4, C6_BAR, K33,
// PRISM. Unknown names throw.
inline MultiGraph named_graph(const std::string& name) {
    if (name == "K2") return graphs::k2();
    if (name == "K4") return graphs::k4();
    if (name == "K33") return graphs::k33();
    if (name == "C6_BAR") return graphs::c6_bar();
    if (name == "PRISM") return graphs::prism();
    if (name == "PETERSEN") return graphs::petersen();
    if (name.size() > 1 && name[0] == 'C') {
        int len = 0;
        for (std::size_t i = 1; i < name.size(); ++i) {
            if (name[i] < '0' || name[i] > '9') len = -1;
            if (len < 0) break;
            len = len * 10 + (name[i] - '0');
        }
        if (len >= 3) return graphs::cycle(len);
    }
    throw std::invalid_argument("named_graph: unknown name '" + name + "'");
}

// Cubic bricks with exactly one removable edge, from a corpus of cubic
// simple graphs on 8 vertices.
inline std::vector<MultiGraph> find_r8_candidates(const std::vector<MultiGraph>& corpus,
                                                  int max_n = kDefaultMaxN) {
    std::vector<MultiGraph> out;
    for (const auto& g : corpus) {
        if (g.vertex_count() != 8 || !is_simple(g)) continue;
        auto deg = degree_sequence(g);
        if (!std::all_of(deg.begin(), deg.end(), [](int d) { return d == 3; })) continue;
        if (!is_brick(g, max_n)) continue;
        if (removable_edges(g, max_n).edges.size() == 1) out.push_back(g);
    }
    return out;
}

}  // namespace brickyard
