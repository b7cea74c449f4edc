#pragma once

// Tight cuts and the tight cut decomposition. Tightness is certified by the
// disjoint-pair test instead of matching enumeration: with an odd shore,
// |M ∩ C| is odd for every perfect matching M, so C fails to be tight exactly
// when some matching contains two (necessarily disjoint) cut edges, i.e. when
// two vertex-disjoint cut edges extend to a perfect matching together.

#include "brickyard/matching.hpp"

namespace brickyard {

struct Cut {
    VertexSet shore;           // X
    std::vector<EdgeId> edges;  // ∂(X), ascending
};

inline Cut cut_of(const MultiGraph& g, VertexSet x) {
    const int n = g.vertex_count();
    const int inside = x.count();
    if (inside == 0 || inside == n || x.bits & ~VertexSet::full(n).bits)
        throw std::invalid_argument("cut_of: shore must be a proper nonempty subset");
    Cut c{x, {}};
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[static_cast<std::size_t>(e)];
        if (x.contains(u) != x.contains(v)) c.edges.push_back(e);
    }
    return c;
}

inline bool is_trivial(const Cut& c, int n) {
    const int s = c.shore.count();
    return s == 1 || s == n - 1;
}

namespace detail {

// The certified tightness test against a prebuilt engine. Assumes the shore
// is proper and nonempty.
inline bool tight_shore(const MatchingEngine& eng, std::uint32_t shore) {
    const MultiGraph& g = eng.graph();
    if (std::popcount(shore) % 2 == 0) return false;  // parity: |M ∩ C| even
    const std::uint32_t full = eng.full_mask();
    std::uint32_t ends[64];
    int cut_size = 0;
    for (auto [u, v] : g.edges()) {
        const bool iu = (shore >> u) & 1u;
        if (iu != ((shore >> v) & 1u)) {
            if (cut_size == 64) throw cap_exceeded("tight_shore: cut larger than 64 edges");
            ends[cut_size++] = (std::uint32_t{1} << u) | (std::uint32_t{1} << v);
        }
    }
    for (int i = 0; i < cut_size; ++i)
        for (int j = i + 1; j < cut_size; ++j) {
            if (ends[i] & ends[j]) continue;  // share a vertex
            if (eng.matchable(full & ~(ends[i] | ends[j]))) return false;
        }
    return true;
}

// 2-colorability of the subgraph induced on `shore`, allocation-free.
inline bool shore_bipartite(const std::vector<std::uint64_t>& adj, std::uint64_t shore) {
    int color[64];
    for (std::uint64_t b = shore; b; b &= b - 1) color[std::countr_zero(b)] = -1;
    for (std::uint64_t seed = shore; seed; seed &= seed - 1) {
        const int s = std::countr_zero(seed);
        if (color[s] != -1) continue;
        color[s] = 0;
        std::uint64_t stack = std::uint64_t{1} << s;
        while (stack) {
            const int v = std::countr_zero(stack);
            stack &= stack - 1;
            for (std::uint64_t b = adj[static_cast<std::size_t>(v)] & shore; b; b &= b - 1) {
                const int w = std::countr_zero(b);
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    stack |= std::uint64_t{1} << w;
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace detail

// Tight iff every perfect matching meets the cut exactly once. Requires a
// matching covered graph.
inline bool is_tight(const MultiGraph& g, const Cut& c, int max_n = kDefaultMaxN) {
    MatchingEngine eng(g, max_n);
    if (!eng.is_matching_covered())
        throw std::invalid_argument("is_tight: graph is not matching covered");
    return detail::tight_shore(eng, static_cast<std::uint32_t>(c.shore.bits));
}

namespace detail {

// Shore scan implementing the selection rule: among nontrivial tight cuts,
// prefer a bipartite shore of minimum size, ties to the smallest shore
// bitmask; if no tight cut has a bipartite shore, smallest odd shore wins.
// Enumeration is by increasing shore size, masks ascending within a size;
// the first tight nonbipartite shore is kept as the fallback.
inline std::optional<VertexSet> find_tight_shore(const MatchingEngine& eng) {
    const MultiGraph& g = eng.graph();
    const int n = g.vertex_count();
    if (n < 6) return std::nullopt;  // no odd shore with 3 <= |X| <= n-3
    const auto adj = adjacency_bits(g);

    std::optional<VertexSet> fallback;
    for (int size = 3; size <= n - 3; size += 2) {
        std::uint64_t mask = (std::uint64_t{1} << size) - 1;
        const std::uint64_t limit = std::uint64_t{1} << n;
        while (mask < limit) {
            if (tight_shore(eng, static_cast<std::uint32_t>(mask))) {
                if (shore_bipartite(adj, mask)) return VertexSet(mask);
                if (!fallback) fallback = VertexSet(mask);
            }
            // next mask of the same popcount (Gosper)
            const std::uint64_t c = mask & -mask;
            const std::uint64_t r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    return fallback;
}

// The same selection rule applied to an already-enumerated cut list (each
// cut via its shore containing vertex 0). Both shores of every cut compete.
inline std::optional<VertexSet> select_decomposition_shore(
    const MultiGraph& g, const std::vector<Cut>& cuts) {
    if (cuts.empty()) return std::nullopt;
    const int n = g.vertex_count();
    const auto adj = adjacency_bits(g);
    std::optional<VertexSet> best, fallback;
    auto better = [](VertexSet a, VertexSet b) {  // (size, mask) ascending
        const int ca = a.count(), cb = b.count();
        return ca != cb ? ca < cb : a.bits < b.bits;
    };
    for (const Cut& c : cuts)
        for (VertexSet s : {c.shore, c.shore.complement(n)}) {
            if (shore_bipartite(adj, s.bits)) {
                if (!best || better(s, *best)) best = s;
            } else if (!fallback || better(s, *fallback)) {
                fallback = s;
            }
        }
    return best ? best : fallback;
}

}  // namespace detail

// The nontrivial tight cut the decomposition splits on, or nullopt when the
// graph is a brick or brace. Deterministic: see detail::find_tight_shore.
inline std::optional<Cut> find_nontrivial_tight_cut(const MultiGraph& g,
                                                    int max_n = kDefaultMaxN) {
    MatchingEngine eng(g, max_n);
    if (!eng.is_matching_covered())
        throw std::invalid_argument("find_nontrivial_tight_cut: graph is not matching covered");
    auto shore = detail::find_tight_shore(eng);
    if (!shore) return std::nullopt;
    return cut_of(g, *shore);
}

struct DecompositionNode {
    enum class Leaf { none, brick, brace };

    MultiGraph graph;
    std::optional<Cut> split;                 // set on internal nodes
    std::vector<DecompositionNode> children;  // empty or exactly two
    Leaf leaf_kind = Leaf::none;
};

inline DecompositionNode tight_cut_decomposition(const MultiGraph& g,
                                                 int max_n = kDefaultMaxN) {
    MatchingEngine eng(g, max_n);
    if (!eng.is_matching_covered())
        throw std::invalid_argument("tight_cut_decomposition: graph is not matching covered");
    DecompositionNode node{g, std::nullopt, {}, DecompositionNode::Leaf::none};
    auto shore = detail::find_tight_shore(eng);
    if (!shore) {
        node.leaf_kind = is_bipartite(g) ? DecompositionNode::Leaf::brace
                                         : DecompositionNode::Leaf::brick;
        return node;
    }
    node.split = cut_of(g, *shore);
    const VertexSet x = *shore;
    node.children.push_back(
        tight_cut_decomposition(contract_shore(g, x).graph, max_n));
    node.children.push_back(tight_cut_decomposition(
        contract_shore(g, x.complement(g.vertex_count())).graph, max_n));
    return node;
}

namespace detail {

inline int brick_count_impl(const MultiGraph& g, int max_n) {
    MatchingEngine eng(g, max_n);
    auto shore = find_tight_shore(eng);
    if (!shore) return is_bipartite(g) ? 0 : 1;
    const VertexSet x = *shore;
    return brick_count_impl(contract_shore(g, x).graph, max_n) +
           brick_count_impl(contract_shore(g, x.complement(g.vertex_count())).graph,
                            max_n);
}

}  // namespace detail

// b(G): number of brick leaves of the decomposition.
inline int brick_count(const MultiGraph& g, int max_n = kDefaultMaxN) {
    if (!is_matching_covered(g, max_n))
        throw std::invalid_argument("brick_count: graph is not matching covered");
    return detail::brick_count_impl(g, max_n);
}

inline bool is_near_brick(const MultiGraph& g, int max_n = kDefaultMaxN) {
    if (g.vertex_count() < 2) return false;
    MatchingEngine eng(g, max_n);
    if (!eng.is_matching_covered()) return false;
    return detail::brick_count_impl(g, max_n) == 1;
}

// Every nontrivial tight cut of g, each listed once via its shore containing
// vertex 0, in scan order. Tight shores are odd and n is even, so sizes
// 3..n-3 cover everything. Used by the lemma checks and the
// decomposition-invariance audit.
inline std::vector<Cut> all_nontrivial_tight_cuts(const MultiGraph& g,
                                                  int max_n = kDefaultMaxN) {
    MatchingEngine eng(g, max_n);
    if (!eng.is_matching_covered())
        throw std::invalid_argument("all_nontrivial_tight_cuts: graph is not matching covered");
    const int n = g.vertex_count();
    std::vector<Cut> out;
    if (n < 6) return out;
    // enumerate each cut once via the shore containing vertex 0
    for (int size = 3; size <= n - 3; size += 2) {
        std::uint64_t mask = (std::uint64_t{1} << size) - 1;
        const std::uint64_t limit = std::uint64_t{1} << n;
        while (mask < limit) {
            if ((mask & 1u) &&
                detail::tight_shore(eng, static_cast<std::uint32_t>(mask)))
                out.push_back(cut_of(g, VertexSet(mask)));
            const std::uint64_t c = mask & -mask;
            const std::uint64_t r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    return out;
}

}  // namespace brickyard
