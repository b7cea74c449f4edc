#pragma once

// Perfect-matching machinery: existence (subset DP over the underlying
// simple adjacency), matching-covered and bicritical tests, removable edges,
// and an independent backtracking enumerator used as the oracle in tests.

#include <cstdint>

#include "brickyard/multigraph.hpp"

namespace brickyard {

struct PerfectMatching {
    std::vector<EdgeId> edges;  // ascending
    friend bool operator==(const PerfectMatching& a, const PerfectMatching& b) {
        return a.edges == b.edges;
    }
    friend bool operator<(const PerfectMatching& a, const PerfectMatching& b) {
        return a.edges < b.edges;
    }
};

struct RemovableEdgeSet {
    std::vector<EdgeId> edges;  // ascending
    bool contains(EdgeId e) const {
        return std::binary_search(edges.begin(), edges.end(), e);
    }
};

namespace detail {

// Bottom-up subset DP: table[mask] = 1 iff the vertices of `mask` can be
// perfectly matched along `adj`. table must hold full+1 zeroed entries.
inline void fill_matchability(std::uint8_t* table, const std::uint32_t* adj,
                              std::uint32_t full) {
    table[0] = 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if (std::popcount(mask) & 1) continue;
        const int v = std::countr_zero(mask);
        const std::uint32_t without_v = mask & (mask - 1);
        std::uint32_t partners = adj[static_cast<std::size_t>(v)] & without_v;
        while (partners) {
            const std::uint32_t u = partners & (~partners + 1);
            if (table[without_v & ~u]) {
                table[mask] = 1;
                break;
            }
            partners &= partners - 1;
        }
    }
}

}  // namespace detail

// Per-graph matchability table: matchable(mask) says whether the induced
// subgraph on `mask` has a perfect matching. Multiplicity is irrelevant for
// existence, so the DP runs on simple-adjacency bitmasks. Requires n <= cap
// (the table has 2^n entries).
class MatchingEngine {
public:
    explicit MatchingEngine(const MultiGraph& g, int max_n = kDefaultMaxN)
        : g_(&g), n_(g.vertex_count()) {
        if (n_ > max_n || n_ > 24)
            throw cap_exceeded("MatchingEngine: n = " + std::to_string(n_) +
                               " exceeds cap " + std::to_string(std::min(max_n, 24)));
        adj_.assign(static_cast<std::size_t>(n_), 0);
        for (auto [u, v] : g.edges()) {
            adj_[static_cast<std::size_t>(u)] |= std::uint32_t{1} << v;
            adj_[static_cast<std::size_t>(v)] |= std::uint32_t{1} << u;
        }
        full_ = n_ >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n_) - 1;
        fill_table();
    }

    int vertex_count() const { return n_; }
    std::uint32_t full_mask() const { return full_; }
    const MultiGraph& graph() const { return *g_; }

    bool matchable(std::uint32_t mask) const {
        return table_[mask] != 0;
    }
    bool has_perfect_matching() const { return matchable(full_); }

    bool has_pm_avoiding(std::uint32_t avoid) const {
        return matchable(full_ & ~avoid);
    }

    // e = uv lies in some perfect matching iff G - u - v has one.
    bool edge_in_some_pm(EdgeId e) const {
        auto [u, v] = g_->edges()[static_cast<std::size_t>(e)];
        return has_pm_avoiding((std::uint32_t{1} << u) | (std::uint32_t{1} << v));
    }

    bool connected() const {
        if (n_ == 0) return false;
        std::uint32_t seen = 1, frontier = 1;
        while (frontier) {
            std::uint32_t next = 0;
            for (std::uint32_t b = frontier; b; b &= b - 1)
                next |= adj_[static_cast<std::size_t>(std::countr_zero(b))];
            frontier = next & ~seen;
            seen |= frontier;
        }
        return seen == full_;
    }

    bool is_matching_covered() const {
        if (n_ < 2 || g_->edge_count() == 0 || !connected()) return false;
        for (EdgeId e = 0; e < g_->edge_count(); ++e)
            if (!edge_in_some_pm(e)) return false;
        return true;
    }

    bool is_bicritical() const {
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (!has_pm_avoiding((std::uint32_t{1} << u) | (std::uint32_t{1} << v)))
                    return false;
        return true;
    }

private:
    void fill_table() {
        table_.assign(std::size_t{1} << n_, 0);
        detail::fill_matchability(table_.data(), adj_.data(), full_);
    }

    const MultiGraph* g_;
    int n_;
    std::uint32_t full_;
    std::vector<std::uint32_t> adj_;
    std::vector<std::uint8_t> table_;
};

inline bool has_perfect_matching(const MultiGraph& g, int max_n = kDefaultMaxN) {
    if (g.vertex_count() == 0) return false;
    return MatchingEngine(g, max_n).has_perfect_matching();
}

inline bool has_pm_avoiding(const MultiGraph& g, VertexSet s, int max_n = kDefaultMaxN) {
    return MatchingEngine(g, max_n).has_pm_avoiding(static_cast<std::uint32_t>(s.bits));
}

inline bool is_matching_covered(const MultiGraph& g, int max_n = kDefaultMaxN) {
    return g.vertex_count() >= 2 && MatchingEngine(g, max_n).is_matching_covered();
}

inline bool is_bicritical(const MultiGraph& g, int max_n = kDefaultMaxN) {
    if (g.vertex_count() == 0) return false;
    return MatchingEngine(g, max_n).is_bicritical();
}

// Complete, duplicate-free enumeration by backtracking on edge ids; the
// independent oracle for everything the engine computes. Matchings come out
// with ascending ids and the list itself in lexicographic order.
inline std::vector<PerfectMatching> enumerate_perfect_matchings(
    const MultiGraph& g, int max_n = kDefaultMaxN) {
    const int n = g.vertex_count();
    if (n > max_n)
        throw cap_exceeded("enumerate_perfect_matchings: n exceeds cap");
    std::vector<PerfectMatching> out;
    if (n == 0 || n % 2 != 0) return out;

    std::vector<std::vector<std::pair<int, EdgeId>>> inc(static_cast<std::size_t>(n));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[static_cast<std::size_t>(e)];
        inc[static_cast<std::size_t>(u)].emplace_back(v, e);
        inc[static_cast<std::size_t>(v)].emplace_back(u, e);
    }
    std::uint64_t covered = 0;
    std::vector<EdgeId> picked;
    auto recurse = [&](auto&& self) -> void {
        if (covered == VertexSet::full(n).bits) {
            PerfectMatching m{picked};
            std::sort(m.edges.begin(), m.edges.end());
            out.push_back(std::move(m));
            return;
        }
        int v = 0;
        while (covered & (std::uint64_t{1} << v)) ++v;
        for (const auto& [w, e] : inc[static_cast<std::size_t>(v)]) {
            if (covered & (std::uint64_t{1} << w)) continue;
            covered |= (std::uint64_t{1} << v) | (std::uint64_t{1} << w);
            picked.push_back(e);
            self(self);
            picked.pop_back();
            covered &= ~((std::uint64_t{1} << v) | (std::uint64_t{1} << w));
        }
    };
    recurse(recurse);
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

// Matching covered test of G - e without materializing the deleted graph:
// simple-adjacency masks are rebuilt on the stack, the DP table lives in a
// thread-local scratch buffer, and the deleted edge is skipped everywhere.
inline bool matching_covered_after_delete(const MultiGraph& g, EdgeId skip, int max_n) {
    const int n = g.vertex_count();
    if (n > max_n || n > 24)
        throw cap_exceeded("matching_covered_after_delete: n exceeds cap");
    if (n < 2 || g.edge_count() <= 1) return false;

    std::uint32_t adj[24] = {};
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (e == skip) continue;
        auto [u, v] = g.edges()[static_cast<std::size_t>(e)];
        adj[u] |= std::uint32_t{1} << v;
        adj[v] |= std::uint32_t{1} << u;
    }
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;

    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t b = frontier; b; b &= b - 1)
            next |= adj[std::countr_zero(b)];
        frontier = next & ~seen;
        seen |= frontier;
    }
    if (seen != full) return false;

    thread_local std::vector<std::uint8_t> scratch;
    if (scratch.size() < (std::size_t{1} << n)) scratch.assign(std::size_t{1} << n, 0);
    std::uint8_t* table = scratch.data();
    std::fill(table, table + (std::size_t{1} << n), 0);
    fill_matchability(table, adj, full);

    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (e == skip) continue;
        auto [u, v] = g.edges()[static_cast<std::size_t>(e)];
        if (!table[full & ~((std::uint32_t{1} << u) | (std::uint32_t{1} << v))])
            return false;
    }
    return true;
}

// Removability of one identified edge. Deleting one copy of a parallel pair
// leaves its twin, so this works on the edge list, not the simple adjacency.
inline bool removable_in(const MultiGraph& g, EdgeId e, int max_n,
                         const std::vector<int>* degrees = nullptr) {
    const int n = g.vertex_count();
    if (n >= 4) {
        auto [u, v] = g.edges()[static_cast<std::size_t>(e)];
        // G - e keeps an endpoint of degree <= 1, and a matching covered
        // graph on >= 4 vertices has minimum degree >= 2.
        if (degrees) {
            if ((*degrees)[static_cast<std::size_t>(u)] < 3 ||
                (*degrees)[static_cast<std::size_t>(v)] < 3)
                return false;
        } else if (degree(g, u) < 3 || degree(g, v) < 3) {
            return false;
        }
    }
    return matching_covered_after_delete(g, e, max_n);
}

}  // namespace detail

inline bool is_removable(const MultiGraph& g, EdgeId e, int max_n = kDefaultMaxN) {
    if (!g.valid_edge(e)) throw std::out_of_range("is_removable: invalid EdgeId");
    if (!is_matching_covered(g, max_n))
        throw std::invalid_argument("is_removable: graph is not matching covered");
    return detail::removable_in(g, e, max_n);
}

inline RemovableEdgeSet removable_edges(const MultiGraph& g, int max_n = kDefaultMaxN) {
    if (!is_matching_covered(g, max_n))
        throw std::invalid_argument("removable_edges: graph is not matching covered");
    RemovableEdgeSet out;
    const auto deg = degree_sequence(g);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (detail::removable_in(g, e, max_n, &deg)) out.edges.push_back(e);
    return out;
}

}  // namespace brickyard
