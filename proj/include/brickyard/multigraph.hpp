#pragma once

// Loopless multigraph with index-identified edges, plus the structural
// transforms everything else is built on: edge deletion, induced subgraphs,
// shore contraction, bisubdivision, ear retraction, connectivity,
// bipartiteness and desk-scale isomorphism.
//
// Parallel edges are distinct entries with distinct EdgeIds. All operations
// are pure: they take graphs by const reference and return new values.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace brickyard {

// Edge identity is the index into the edge list. Deleting an edge shifts the
// ids above it down by one (order-preserving remap).
using EdgeId = int;

inline constexpr int kMaxIsoVertices = 16;   // cap for are_isomorphic
inline constexpr int kDefaultMaxN = 16;      // default cap for subset scans

// Thrown when an operation would exceed its configured size cap.
struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Subset of vertices 0..63, bitset semantics.
struct VertexSet {
    std::uint64_t bits = 0;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t b) : bits(b) {}

    static constexpr VertexSet full(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }

    constexpr bool empty() const { return bits == 0; }
    constexpr int count() const { return std::popcount(bits); }
    constexpr bool contains(int v) const { return (bits >> v) & 1u; }
    void add(int v) { bits |= std::uint64_t{1} << v; }
    void remove(int v) { bits &= ~(std::uint64_t{1} << v); }

    constexpr VertexSet complement(int n) const {
        return VertexSet(full(n).bits & ~bits);
    }
    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (std::uint64_t b = bits; b; b &= b - 1)
            out.push_back(std::countr_zero(b));
        return out;
    }
    friend bool operator==(VertexSet a, VertexSet b) { return a.bits == b.bits; }
};

class MultiGraph {
public:
    MultiGraph() = default;
    explicit MultiGraph(int n) : n_(check_order(n)) {}
    MultiGraph(int n, std::vector<std::pair<int, int>> edges)
        : n_(check_order(n)), edges_(std::move(edges)) {
        for (std::size_t i = 0; i < edges_.size(); ++i)
            check_edge(edges_[i].first, edges_[i].second, i);
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    std::pair<int, int> endpoints(EdgeId e) const {
        if (!valid_edge(e))
            throw std::out_of_range("invalid EdgeId " + std::to_string(e));
        return edges_[static_cast<std::size_t>(e)];
    }
    bool valid_edge(EdgeId e) const {
        return e >= 0 && static_cast<std::size_t>(e) < edges_.size();
    }

    void add_edge(int u, int v) {
        check_edge(u, v, edges_.size());
        edges_.emplace_back(u, v);
    }

    friend bool operator==(const MultiGraph& a, const MultiGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    static int check_order(int n) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
        return n;
    }
    void check_edge(int u, int v, std::size_t pos) const {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("edge " + std::to_string(pos) +
                                        " endpoint out of range");
        if (u == v)
            throw std::invalid_argument("loop at vertex " + std::to_string(u) +
                                        " (edge " + std::to_string(pos) + ")");
    }

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
};

namespace detail {

inline void require_nonempty(const MultiGraph& g, const char* op) {
    if (g.vertex_count() == 0)
        throw std::invalid_argument(std::string(op) + ": empty graph");
}

// Simple-adjacency bitmasks; requires n <= 64.
inline std::vector<std::uint64_t> adjacency_bits(const MultiGraph& g) {
    if (g.vertex_count() > 64)
        throw cap_exceeded("adjacency bitmasks need n <= 64");
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.vertex_count()), 0);
    for (auto [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
    return adj;
}

// Vertices reachable from `start` inside `allowed`.
inline std::uint64_t reach(const std::vector<std::uint64_t>& adj, int start,
                           std::uint64_t allowed) {
    std::uint64_t seen = std::uint64_t{1} << start;
    std::uint64_t frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t b = frontier; b; b &= b - 1)
            next |= adj[static_cast<std::size_t>(std::countr_zero(b))];
        frontier = next & allowed & ~seen;
        seen |= frontier;
    }
    return seen;
}

}  // namespace detail

inline int degree(const MultiGraph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw std::out_of_range("degree: vertex out of range");
    int d = 0;
    for (auto [a, b] : g.edges()) d += (a == v) + (b == v);
    return d;
}

inline std::vector<int> degree_sequence(const MultiGraph& g) {
    std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()), 0);
    for (auto [a, b] : g.edges()) {
        ++deg[static_cast<std::size_t>(a)];
        ++deg[static_cast<std::size_t>(b)];
    }
    return deg;
}

inline int max_degree(const MultiGraph& g) {
    detail::require_nonempty(g, "max_degree");
    auto deg = degree_sequence(g);
    return *std::max_element(deg.begin(), deg.end());
}

inline MultiGraph delete_edge(const MultiGraph& g, EdgeId e) {
    if (!g.valid_edge(e))
        throw std::out_of_range("delete_edge: invalid EdgeId " + std::to_string(e));
    std::vector<std::pair<int, int>> edges = g.edges();
    edges.erase(edges.begin() + e);
    return MultiGraph(g.vertex_count(), std::move(edges));
}

// Induced subgraph with vertices relabeled 0..|X|-1 in ascending original
// order; `vertices[i]` is the original label of new vertex i and
// `edge_origin[j]` the original EdgeId of new edge j.
struct InducedSubgraph {
    MultiGraph graph;
    std::vector<int> vertices;
    std::vector<EdgeId> edge_origin;
};

inline InducedSubgraph induced(const MultiGraph& g, VertexSet x) {
    if (x.empty()) throw std::invalid_argument("induced: empty vertex set");
    std::vector<int> members = x.to_vector();
    if (members.back() >= g.vertex_count())
        throw std::out_of_range("induced: vertex out of range");
    std::vector<int> relabel(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < members.size(); ++i)
        relabel[static_cast<std::size_t>(members[i])] = static_cast<int>(i);

    InducedSubgraph out{MultiGraph(static_cast<int>(members.size())),
                        std::move(members), {}};
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[static_cast<std::size_t>(e)];
        if (x.contains(u) && x.contains(v)) {
            out.graph.add_edge(relabel[static_cast<std::size_t>(u)],
                               relabel[static_cast<std::size_t>(v)]);
            out.edge_origin.push_back(e);
        }
    }
    return out;
}

// G/(X -> x): the complement shore keeps its relative order as vertices
// 0..|X̄|-1 and the merged vertex x comes last. Edges inside X are dropped
// (edge_map[e] == -1); all others keep their relative order.
struct Contraction {
    MultiGraph graph;
    int merged_vertex;
    std::vector<int> vertex_map;   // original vertex -> new vertex
    std::vector<EdgeId> edge_map;  // original EdgeId -> new EdgeId or -1
};

inline Contraction contract_shore(const MultiGraph& g, VertexSet x) {
    const int n = g.vertex_count();
    const int inside = x.count();
    if (inside == 0 || inside == n || x.bits & ~VertexSet::full(n).bits)
        throw std::invalid_argument("contract_shore: shore must be a proper nonempty subset");

    Contraction out;
    out.merged_vertex = n - inside;
    out.vertex_map.assign(static_cast<std::size_t>(n), out.merged_vertex);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (!x.contains(v)) out.vertex_map[static_cast<std::size_t>(v)] = next++;

    out.graph = MultiGraph(out.merged_vertex + 1);
    out.edge_map.assign(static_cast<std::size_t>(g.edge_count()), -1);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[static_cast<std::size_t>(e)];
        if (x.contains(u) && x.contains(v)) continue;  // collapses, dropped
        out.edge_map[static_cast<std::size_t>(e)] = out.graph.edge_count();
        out.graph.add_edge(out.vertex_map[static_cast<std::size_t>(u)],
                           out.vertex_map[static_cast<std::size_t>(v)]);
    }
    return out;
}

inline bool is_connected(const MultiGraph& g) {
    const int n = g.vertex_count();
    if (n == 0) return false;
    if (n == 1) return true;
    auto adj = detail::adjacency_bits(g);
    return detail::reach(adj, 0, VertexSet::full(n).bits) == VertexSet::full(n).bits;
}

// Vertex connectivity >= k on the underlying simple graph, k in {1,2,3}.
// Parallel edges never change vertex connectivity.
inline bool is_k_connected(const MultiGraph& g, int k) {
    if (k < 1 || k > 3) throw std::invalid_argument("is_k_connected: k must be 1, 2 or 3");
    const int n = g.vertex_count();
    if (n < k + 1) return false;
    auto adj = detail::adjacency_bits(g);
    const std::uint64_t all = VertexSet::full(n).bits;

    auto connected_within = [&](std::uint64_t allowed) {
        const int start = std::countr_zero(allowed);
        return detail::reach(adj, start, allowed) == allowed;
    };
    if (!connected_within(all)) return false;
    if (k >= 2) {
        for (int v = 0; v < n; ++v)
            if (!connected_within(all & ~(std::uint64_t{1} << v))) return false;
    }
    if (k >= 3) {
        for (int v = 0; v < n; ++v)
            for (int w = v + 1; w < n; ++w)
                if (!connected_within(all & ~(std::uint64_t{1} << v) &
                                      ~(std::uint64_t{1} << w)))
                    return false;
    }
    return true;
}

// Proper 2-coloring, one component at a time (vertex 0 of each component
// gets side 0). Returns the two sides, or nullopt on an odd cycle.
struct Bipartition {
    VertexSet side[2];
};

inline std::optional<Bipartition> bipartition(const MultiGraph& g) {
    const int n = g.vertex_count();
    auto adj = detail::adjacency_bits(g);
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    Bipartition out;
    for (int s = 0; s < n; ++s) {
        if (color[static_cast<std::size_t>(s)] != -1) continue;
        color[static_cast<std::size_t>(s)] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (std::uint64_t b = adj[static_cast<std::size_t>(v)]; b; b &= b - 1) {
                int w = std::countr_zero(b);
                if (color[static_cast<std::size_t>(w)] == -1) {
                    color[static_cast<std::size_t>(w)] =
                        1 - color[static_cast<std::size_t>(v)];
                    stack.push_back(w);
                } else if (color[static_cast<std::size_t>(w)] ==
                           color[static_cast<std::size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    for (int v = 0; v < n; ++v) out.side[color[static_cast<std::size_t>(v)]].add(v);
    return out;
}

inline bool is_bipartite(const MultiGraph& g) { return bipartition(g).has_value(); }

inline bool is_simple(const MultiGraph& g) {
    std::vector<std::pair<int, int>> seen;
    seen.reserve(g.edges().size());
    for (auto [u, v] : g.edges())
        seen.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

// One edge per adjacent pair, emitted in (u, v) lexicographic order.
inline MultiGraph underlying_simple(const MultiGraph& g) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(g.edges().size());
    for (auto [u, v] : g.edges())
        pairs.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return MultiGraph(g.vertex_count(), std::move(pairs));
}

namespace detail {

// Edge multiplicity matrix, n x n.
inline std::vector<std::uint8_t> multiplicity_matrix(const MultiGraph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<std::uint8_t> m(n * n, 0);
    for (auto [u, v] : g.edges()) {
        ++m[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)];
        ++m[static_cast<std::size_t>(v) * n + static_cast<std::size_t>(u)];
    }
    return m;
}

}  // namespace detail

// Exact multiplicity-preserving isomorphism by backtracking with
// degree-sequence pruning. Desk scale only: throws beyond n = 16.
inline bool are_isomorphic(const MultiGraph& g, const MultiGraph& h) {
    const int n = g.vertex_count();
    if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    if (n > kMaxIsoVertices || h.vertex_count() > kMaxIsoVertices)
        throw cap_exceeded("are_isomorphic: graphs larger than n = 16");
    if (n == 0) return true;

    auto dg = degree_sequence(g);
    auto dh = degree_sequence(h);
    {
        auto sg = dg, sh = dh;
        std::sort(sg.begin(), sg.end());
        std::sort(sh.begin(), sh.end());
        if (sg != sh) return false;
    }
    const auto mg = detail::multiplicity_matrix(g);
    const auto mh = detail::multiplicity_matrix(h);
    const auto nn = static_cast<std::size_t>(n);

    // Map vertices of g in descending-degree order; candidates must match on
    // degree and on multiplicities toward everything already mapped.
    std::vector<int> order(nn);
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return dg[static_cast<std::size_t>(a)] > dg[static_cast<std::size_t>(b)]; });

    std::vector<int> image(nn, -1);
    std::vector<bool> used(nn, false);

    auto backtrack = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == nn) return true;
        const int v = order[depth];
        for (int w = 0; w < n; ++w) {
            if (used[static_cast<std::size_t>(w)]) continue;
            if (dh[static_cast<std::size_t>(w)] != dg[static_cast<std::size_t>(v)]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < depth && ok; ++j) {
                const int a = order[j];
                ok = mg[static_cast<std::size_t>(v) * nn + static_cast<std::size_t>(a)] ==
                     mh[static_cast<std::size_t>(w) * nn +
                        static_cast<std::size_t>(image[static_cast<std::size_t>(a)])];
            }
            if (!ok) continue;
            image[static_cast<std::size_t>(v)] = w;
            used[static_cast<std::size_t>(w)] = true;
            if (self(self, depth + 1)) return true;
            used[static_cast<std::size_t>(w)] = false;
            image[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    };
    return backtrack(backtrack, 0);
}

// Replace edge e = uv by a path u, w1, ..., w_{length-1}, v of the given odd
// length. The new vertices are appended after the existing ones; edge e's id
// slot becomes the first path edge (u, w1) and the remaining path edges are
// appended, so every other edge keeps its id.
inline MultiGraph bisubdivide(const MultiGraph& g, EdgeId e, int length) {
    if (!g.valid_edge(e))
        throw std::out_of_range("bisubdivide: invalid EdgeId");
    if (length < 3 || length % 2 == 0)
        throw std::invalid_argument("bisubdivide: length must be odd and >= 3");
    auto [u, v] = g.edges()[static_cast<std::size_t>(e)];
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges = g.edges();
    edges[static_cast<std::size_t>(e)] = {u, n};
    for (int i = 1; i < length - 1; ++i) edges.emplace_back(n + i - 1, n + i);
    edges.emplace_back(n + length - 2, v);
    return MultiGraph(n + length - 1, std::move(edges));
}

// A maximal chain through degree-2 vertices. `vertices` lists the path in
// order; for a closed chain (cycle through one anchor, or a component that is
// itself a cycle) the first and last entries coincide. `length` counts edges.
// `has_long_odd_ear` says whether some subpath is a single ear of odd length
// >= 3: true for open chains of length >= 3 and closed ones of length >= 4.
struct EarChain {
    std::vector<int> vertices;
    bool closed = false;
    int length() const { return static_cast<int>(vertices.size()) - 1; }
    bool has_long_odd_ear = false;
};

inline std::vector<EarChain> find_single_ears(const MultiGraph& g) {
    const int n = g.vertex_count();
    auto deg = degree_sequence(g);
    // incidence lists so parallel edges traverse correctly
    std::vector<std::vector<std::pair<int, EdgeId>>> inc(static_cast<std::size_t>(n));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[static_cast<std::size_t>(e)];
        inc[static_cast<std::size_t>(u)].emplace_back(v, e);
        inc[static_cast<std::size_t>(v)].emplace_back(u, e);
    }

    std::vector<EarChain> chains;
    std::vector<bool> edge_used(static_cast<std::size_t>(g.edge_count()), false);

    auto walk = [&](int anchor, std::pair<int, EdgeId> first) {
        EarChain chain;
        chain.vertices.push_back(anchor);
        edge_used[static_cast<std::size_t>(first.second)] = true;
        int prev_edge = first.second;
        int cur = first.first;
        while (deg[static_cast<std::size_t>(cur)] == 2 && cur != anchor) {
            chain.vertices.push_back(cur);
            auto& pair0 = inc[static_cast<std::size_t>(cur)][0];
            auto& pair1 = inc[static_cast<std::size_t>(cur)][1];
            auto next = pair0.second == prev_edge ? pair1 : pair0;
            edge_used[static_cast<std::size_t>(next.second)] = true;
            prev_edge = next.second;
            cur = next.first;
        }
        chain.vertices.push_back(cur);
        chain.closed = (cur == anchor);
        chain.has_long_odd_ear =
            chain.closed ? chain.length() >= 4 : chain.length() >= 3;
        return chain;
    };

    // chains anchored at vertices of degree != 2
    for (int v = 0; v < n; ++v) {
        if (deg[static_cast<std::size_t>(v)] == 2) continue;
        for (const auto& out : inc[static_cast<std::size_t>(v)]) {
            if (edge_used[static_cast<std::size_t>(out.second)]) continue;
            if (deg[static_cast<std::size_t>(out.first)] != 2 && out.first != v) {
                // single edge between two anchors: a trivial length-1 chain
                edge_used[static_cast<std::size_t>(out.second)] = true;
                chains.push_back(EarChain{{v, out.first}, false, false});
                continue;
            }
            chains.push_back(walk(v, out));
        }
    }
    // leftover pure cycles where every vertex has degree 2
    for (int v = 0; v < n; ++v) {
        if (deg[static_cast<std::size_t>(v)] != 2) continue;
        auto& first = inc[static_cast<std::size_t>(v)][0];
        if (edge_used[static_cast<std::size_t>(first.second)]) continue;
        chains.push_back(walk(v, first));
    }
    return chains;
}

// Retract a single ear of odd length >= 3: remove its interior vertices and
// join the two ends by a new edge (appended last). Remaining vertices are
// renumbered in ascending original order.
inline MultiGraph retract_ear(const MultiGraph& g, const std::vector<int>& ear) {
    if (ear.size() < 4 || ear.size() % 2 != 0)
        throw std::invalid_argument("retract_ear: ear must have odd length >= 3");
    const int s = ear.front();
    const int t = ear.back();
    auto deg = degree_sequence(g);
    auto mult = detail::multiplicity_matrix(g);
    const auto n = static_cast<std::size_t>(g.vertex_count());
    VertexSet interior;
    for (std::size_t i = 0; i + 1 < ear.size(); ++i) {
        const int a = ear[i];
        const int b = ear[i + 1];
        if (a < 0 || a >= g.vertex_count() || b < 0 || b >= g.vertex_count() ||
            mult[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)] == 0)
            throw std::invalid_argument("retract_ear: not a path of the graph");
        if (i + 1 < ear.size() - 1) {
            if (deg[static_cast<std::size_t>(b)] != 2)
                throw std::invalid_argument("retract_ear: interior vertex of degree != 2");
            if (interior.contains(b) || b == s || b == t)
                throw std::invalid_argument("retract_ear: not a simple path");
            interior.add(b);
        }
    }
    if (s == t) throw std::invalid_argument("retract_ear: ends must differ");

    std::vector<int> relabel(n, -1);
    int next = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!interior.contains(v)) relabel[static_cast<std::size_t>(v)] = next++;

    MultiGraph out(next);
    for (auto [u, v] : g.edges()) {
        if (interior.contains(u) || interior.contains(v)) continue;
        out.add_edge(relabel[static_cast<std::size_t>(u)],
                     relabel[static_cast<std::size_t>(v)]);
    }
    out.add_edge(relabel[static_cast<std::size_t>(s)],
                 relabel[static_cast<std::size_t>(t)]);
    return out;
}

// Shortcut form of irreducibility for 2-connected graphs on >= 4 vertices;
// the definitional ear search is the oracle (see classify.hpp).
inline bool has_adjacent_degree_two(const MultiGraph& g) {
    auto deg = degree_sequence(g);
    for (auto [u, v] : g.edges())
        if (deg[static_cast<std::size_t>(u)] == 2 &&
            deg[static_cast<std::size_t>(v)] == 2)
            return true;
    return false;
}

}  // namespace brickyard
