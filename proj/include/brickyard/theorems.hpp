#pragma once

// Executable verification of the two removable-edge bounds and the
// supporting lemma suite, over corpora of graphs. Everything here reports
// violations as data instead of throwing, so corpus runs always finish.

#include <functional>

#include "brickyard/classify.hpp"
#include "brickyard/formats.hpp"

namespace brickyard {

enum class HypothesisFailure {
    not_matching_covered,
    not_near_brick,
    not_irreducible,
    not_brick,
    is_k4,
    is_c6_bar,
};

inline const char* to_string(HypothesisFailure f) {
    switch (f) {
        case HypothesisFailure::not_matching_covered: return "not-matching-covered";
        case HypothesisFailure::not_near_brick: return "not-near-brick";
        case HypothesisFailure::not_irreducible: return "not-irreducible";
        case HypothesisFailure::not_brick: return "not-brick";
        case HypothesisFailure::is_k4: return "is-K4";
        case HypothesisFailure::is_c6_bar: return "is-C6-bar";
    }
    return "?";
}

struct TheoremVerdict {
    std::string graph_id;
    bool hypothesis_holds = false;
    std::vector<HypothesisFailure> hypothesis_failures;
    int delta = 0;
    int bound = 0;                       // max(delta - 2, 0)
    std::optional<int> removable_count;  // defined when matching covered
    std::optional<bool> satisfied;       // defined when the hypothesis holds
};

// Everything both theorems, the extremal search and the reports need about
// one graph, computed in a single pass.
struct AnalysisCore {
    int n = 0, m = 0;
    int delta = 0;
    bool simple = true;
    bool bipartite = false;
    bool irreducible = true;
    bool matching_covered = false;
    bool brick_elp = false;         // 3-connected and bicritical
    bool excluded_k4 = false;       // simple and isomorphic to K4
    bool excluded_c6bar = false;    // simple and isomorphic to the prism
    std::optional<int> b;           // brick count, when matching covered
    std::optional<int> removable_count;
};

inline AnalysisCore analyze_core(const MultiGraph& g, int max_n = kDefaultMaxN) {
    AnalysisCore core;
    core.n = g.vertex_count();
    core.m = g.edge_count();
    if (core.n == 0) return core;
    core.delta = max_degree(g);
    core.simple = is_simple(g);
    core.bipartite = is_bipartite(g);
    core.irreducible = is_irreducible(g);
    MatchingEngine eng(g, max_n);
    core.matching_covered = eng.is_matching_covered();
    if (!core.matching_covered) return core;
    core.brick_elp = is_brick(g, max_n);
    core.b = detail::brick_count_impl(g, max_n);
    if (core.simple) {
        if (core.n == 4 && core.m == 6)
            core.excluded_k4 = are_isomorphic(g, graphs::k4());
        if (core.n == 6 && core.m == 9 && !core.bipartite)
            core.excluded_c6bar = are_isomorphic(g, graphs::c6_bar());
    }
    int count = 0;
    const auto deg = degree_sequence(g);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (detail::removable_in(g, e, max_n, &deg)) ++count;
    core.removable_count = count;
    return core;
}

inline TheoremVerdict theorem2_verdict(const AnalysisCore& core,
                                       std::string graph_id = {}) {
    TheoremVerdict v;
    v.graph_id = std::move(graph_id);
    v.delta = core.delta;
    v.bound = std::max(core.delta - 2, 0);
    v.removable_count = core.removable_count;
    if (!core.matching_covered) {
        v.hypothesis_failures.push_back(HypothesisFailure::not_matching_covered);
    } else {
        if (core.b != 1)
            v.hypothesis_failures.push_back(HypothesisFailure::not_near_brick);
        if (!core.irreducible)
            v.hypothesis_failures.push_back(HypothesisFailure::not_irreducible);
        if (core.excluded_k4) v.hypothesis_failures.push_back(HypothesisFailure::is_k4);
        if (core.excluded_c6bar)
            v.hypothesis_failures.push_back(HypothesisFailure::is_c6_bar);
    }
    v.hypothesis_holds = v.hypothesis_failures.empty();
    if (v.hypothesis_holds) v.satisfied = *v.removable_count >= v.bound;
    return v;
}

inline TheoremVerdict theorem1_verdict(const AnalysisCore& core,
                                       std::string graph_id = {}) {
    TheoremVerdict v;
    v.graph_id = std::move(graph_id);
    v.delta = core.delta;
    v.bound = std::max(core.delta - 2, 0);
    v.removable_count = core.removable_count;
    if (!core.matching_covered) {
        v.hypothesis_failures.push_back(HypothesisFailure::not_matching_covered);
    } else {
        if (!core.brick_elp)
            v.hypothesis_failures.push_back(HypothesisFailure::not_brick);
        if (core.excluded_k4) v.hypothesis_failures.push_back(HypothesisFailure::is_k4);
        if (core.excluded_c6bar)
            v.hypothesis_failures.push_back(HypothesisFailure::is_c6_bar);
    }
    v.hypothesis_holds = v.hypothesis_failures.empty();
    if (v.hypothesis_holds) v.satisfied = *v.removable_count >= v.bound;
    return v;
}

inline TheoremVerdict verify_theorem2(const MultiGraph& g, int max_n = kDefaultMaxN,
                                      std::string graph_id = {}) {
    return theorem2_verdict(analyze_core(g, max_n), std::move(graph_id));
}

inline TheoremVerdict verify_theorem1(const MultiGraph& g, int max_n = kDefaultMaxN,
                                      std::string graph_id = {}) {
    return theorem1_verdict(analyze_core(g, max_n), std::move(graph_id));
}

enum class LemmaId {
    l1,
    l2,
    l3,
    l4,
    l5,
    l6,
    claim1,
    decomp_invariance,
    four_vertex_census,
};

inline const char* to_string(LemmaId id) {
    switch (id) {
        case LemmaId::l1: return "L1";
        case LemmaId::l2: return "L2";
        case LemmaId::l3: return "L3";
        case LemmaId::l4: return "L4";
        case LemmaId::l5: return "L5";
        case LemmaId::l6: return "L6";
        case LemmaId::claim1: return "Claim1";
        case LemmaId::decomp_invariance: return "DecompInvariance";
        case LemmaId::four_vertex_census: return "FourVertexCensus";
    }
    return "?";
}

// Violations carry the graph re-encoded in sparse6 so a failing instance can
// be replayed through the CLI.
struct LemmaViolation {
    std::string graph_sparse6;
    std::string detail;
};

struct LemmaReport {
    LemmaId id{};
    long instances_checked = 0;
    std::vector<LemmaViolation> violations;

    void note(const MultiGraph& g, std::string detail) {
        violations.push_back({to_sparse6(g), std::move(detail)});
    }
    void merge(LemmaReport&& other) {
        instances_checked += other.instances_checked;
        for (auto& v : other.violations) violations.push_back(std::move(v));
    }
};

// Seam for the fault-injection test: the lemma checks fetch removable-edge
// sets through this hook.
struct LemmaHooks {
    std::function<RemovableEdgeSet(const MultiGraph&, int)> removable =
        [](const MultiGraph& g, int max_n) { return removable_edges(g, max_n); };
};

struct Lemma6Result {
    bool applicable = false;  // bisubdivision was matching covered
    bool ok = true;
    std::string detail;
};

// Bisubdivide g at e, and when the result H is matching covered check
// b(H) = b(G) and RE(H) = RE(G) \ {e}. Edge ids of G survive in H by
// construction, so the removable sets compare directly.
//
// The removable-set relation does not hold for 2-vertex multigraph bases:
// in the graph with two parallel edges both copies are removable, yet its
// bisubdivision is C4, which has none. The check reports that honestly.
inline Lemma6Result verify_lemma6_roundtrip(const MultiGraph& g, EdgeId e, int length,
                                            int max_n = kDefaultMaxN,
                                            const LemmaHooks& hooks = {}) {
    Lemma6Result r;
    MultiGraph h = bisubdivide(g, e, length);
    if (!is_matching_covered(h, max_n)) return r;
    r.applicable = true;
    if (!is_matching_covered(g, max_n)) {
        r.ok = false;
        r.detail = "bisubdivision matching covered but base graph is not";
        return r;
    }
    const int bg = detail::brick_count_impl(g, max_n);
    const int bh = detail::brick_count_impl(h, max_n);
    if (bg != bh) {
        r.ok = false;
        r.detail = "b changed under bisubdivision: " + std::to_string(bg) + " vs " +
                   std::to_string(bh);
        return r;
    }
    auto re_g = hooks.removable(g, max_n).edges;
    auto re_h = hooks.removable(h, max_n).edges;
    std::vector<EdgeId> expect;
    for (EdgeId id : re_g)
        if (id != e) expect.push_back(id);
    if (re_h != expect) {
        r.ok = false;
        r.detail = "RE(H) differs from RE(G) minus the bisubdivided edge";
    }
    return r;
}

namespace detail {

inline void collect_leaves(const MultiGraph& g, int max_n, std::vector<MultiGraph>& out) {
    MatchingEngine eng(g, max_n);
    auto shore = find_tight_shore(eng);
    if (!shore) {
        out.push_back(g);
        return;
    }
    collect_leaves(contract_shore(g, *shore).graph, max_n, out);
    collect_leaves(contract_shore(g, shore->complement(g.vertex_count())).graph, max_n,
                   out);
}

inline bool same_leaf_multiset(std::vector<MultiGraph> a, std::vector<MultiGraph> b) {
    if (a.size() != b.size()) return false;
    for (auto& x : a) x = underlying_simple(x);
    for (auto& y : b) y = underlying_simple(y);
    std::vector<bool> used(b.size(), false);
    for (const auto& x : a) {
        bool found = false;
        for (std::size_t j = 0; j < b.size() && !found; ++j) {
            if (used[j]) continue;
            if (are_isomorphic(x, b[j])) {
                used[j] = true;
                found = true;
            }
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace detail

// Per-graph results of the tight-cut lemma checks (L3, L4, L5) and the
// decomposition-invariance audit; aggregated over corpora by the callers.
struct TightCutLemmaChecks {
    LemmaReport l3{LemmaId::l3};
    LemmaReport l4{LemmaId::l4};
    LemmaReport l5{LemmaId::l5};
    LemmaReport invariance{LemmaId::decomp_invariance};

    void merge(TightCutLemmaChecks&& o) {
        l3.merge(std::move(o.l3));
        l4.merge(std::move(o.l4));
        l5.merge(std::move(o.l5));
        invariance.merge(std::move(o.invariance));
    }
};

namespace detail {

inline TightCutLemmaChecks tight_cut_lemmas_impl(const MultiGraph& g,
                                                 const std::vector<Cut>& cuts,
                                                 const RemovableEdgeSet& re_g, int b_g,
                                                 int max_n, const LemmaHooks& hooks) {
    TightCutLemmaChecks out;
    try {
        const int n = g.vertex_count();
        const auto adj = detail::adjacency_bits(g);

        std::vector<MultiGraph> first_leaves;
        for (std::size_t ci = 0; ci < cuts.size(); ++ci) {
            const VertexSet x = cuts[ci].shore;
            const VertexSet xbar = x.complement(n);
            Contraction g1 = contract_shore(g, x);
            Contraction g2 = contract_shore(g, xbar);

            // Lemma 4: b is additive over the two contractions
            ++out.l4.instances_checked;
            const int b1 = detail::brick_count_impl(g1.graph, max_n);
            const int b2 = detail::brick_count_impl(g2.graph, max_n);
            if (b_g != b1 + b2)
                out.l4.note(g, "b not additive over shore " +
                                   std::to_string(x.bits) + ": " + std::to_string(b_g) +
                                   " != " + std::to_string(b1) + "+" + std::to_string(b2));

            // Lemma 5: in a near-brick exactly one shore is bipartite
            if (b_g == 1) {
                ++out.l5.instances_checked;
                const bool bx = detail::shore_bipartite(adj, x.bits);
                const bool by = detail::shore_bipartite(adj, xbar.bits);
                if (bx == by)
                    out.l5.note(g, std::string("shores of tight cut both ") +
                                       (bx ? "bipartite" : "nonbipartite") +
                                       ", shore " + std::to_string(x.bits));
            }

            // Lemma 3: removable in G iff removable in each contraction
            // containing the edge
            const auto re_1 = hooks.removable(g1.graph, max_n);
            const auto re_2 = hooks.removable(g2.graph, max_n);
            for (EdgeId e = 0; e < g.edge_count(); ++e) {
                ++out.l3.instances_checked;
                bool in_contractions = true;
                if (g1.edge_map[static_cast<std::size_t>(e)] >= 0)
                    in_contractions &= re_1.contains(g1.edge_map[static_cast<std::size_t>(e)]);
                if (g2.edge_map[static_cast<std::size_t>(e)] >= 0)
                    in_contractions &= re_2.contains(g2.edge_map[static_cast<std::size_t>(e)]);
                if (re_g.contains(e) != in_contractions)
                    out.l3.note(g, "edge " + std::to_string(e) +
                                       " removability mismatch at shore " +
                                       std::to_string(x.bits));
            }

            // decomposition invariance: leaves reached through this top cut
            std::vector<MultiGraph> leaves;
            detail::collect_leaves(g1.graph, max_n, leaves);
            detail::collect_leaves(g2.graph, max_n, leaves);
            int bricks_here = 0;
            for (const auto& leaf : leaves)
                if (!is_bipartite(leaf)) ++bricks_here;
            ++out.invariance.instances_checked;
            if (bricks_here != b_g)
                out.invariance.note(g, "brick count differs via shore " +
                                           std::to_string(x.bits));
            if (ci == 0) {
                first_leaves = std::move(leaves);
            } else if (!detail::same_leaf_multiset(first_leaves, leaves)) {
                out.invariance.note(g, "leaf multiset differs via shore " +
                                           std::to_string(x.bits));
            }
        }
    } catch (const cap_exceeded&) {
        throw;  // a cap problem is not a lemma violation
    } catch (const std::exception& ex) {
        out.invariance.note(g, std::string("exception: ") + ex.what());
    }
    return out;
}

}  // namespace detail

inline TightCutLemmaChecks check_tight_cut_lemmas(const MultiGraph& g,
                                                  int max_n = kDefaultMaxN,
                                                  const LemmaHooks& hooks = {}) {
    auto cuts = all_nontrivial_tight_cuts(g, max_n);
    if (cuts.empty()) return {};
    return detail::tight_cut_lemmas_impl(g, cuts, hooks.removable(g, max_n),
                                         detail::brick_count_impl(g, max_n), max_n,
                                         hooks);
}

// Internal enumeration of all 2^6 labeled simple graphs on four vertices;
// exactly the copies of C4 and K4 may be matching covered, and both occur.
inline LemmaReport four_vertex_census(int max_n = kDefaultMaxN) {
    LemmaReport report{LemmaId::four_vertex_census};
    const std::pair<int, int> slots[6] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    const MultiGraph c4 = graphs::c4();
    const MultiGraph k4 = graphs::k4();
    bool saw_c4 = false, saw_k4 = false;
    for (int mask = 0; mask < 64; ++mask) {
        ++report.instances_checked;
        MultiGraph g(4);
        for (int i = 0; i < 6; ++i)
            if ((mask >> i) & 1) g.add_edge(slots[i].first, slots[i].second);
        if (!is_matching_covered(g, max_n)) continue;
        if (are_isomorphic(g, c4)) {
            saw_c4 = true;
        } else if (are_isomorphic(g, k4)) {
            saw_k4 = true;
        } else {
            report.note(g, "unexpected matching covered graph on four vertices, mask " +
                               std::to_string(mask));
        }
    }
    if (!saw_c4) report.violations.push_back({"", "no labeled copy of C4 found"});
    if (!saw_k4) report.violations.push_back({"", "no labeled copy of K4 found"});
    return report;
}

// The whole lemma suite over a materialized corpus. Lemma 6 runs at lengths
// 3 and 5; Claim 1 runs on every parallel pair present in the corpus, so
// pass doubled-edge variants to exercise it.
inline std::vector<LemmaReport> run_lemma_suite(const std::vector<MultiGraph>& corpus,
                                                int max_n = kDefaultMaxN,
                                                const LemmaHooks& hooks = {}) {
    LemmaReport l1{LemmaId::l1}, l2{LemmaId::l2}, l6{LemmaId::l6}, c1{LemmaId::claim1};
    TightCutLemmaChecks tc;
    if (corpus.empty())  // nothing applicable, census included
        return {l1,     l2, tc.l3, tc.l4, tc.l5, l6, c1, tc.invariance,
                LemmaReport{LemmaId::four_vertex_census}};

    for (const auto& g : corpus) {
        if (g.vertex_count() < 2) continue;
        MatchingEngine eng(g, max_n);
        if (!eng.is_matching_covered()) continue;

        const bool brace = is_brace(g, max_n);
        if (brace && g.vertex_count() >= 6) {
            ++l1.instances_checked;
            if (static_cast<int>(hooks.removable(g, max_n).edges.size()) != g.edge_count())
                l1.note(g, "brace with a nonremovable edge");
            ++l2.instances_checked;
            if (!is_k_connected(g, 3)) l2.note(g, "brace not 3-connected");
        }

        tc.merge(check_tight_cut_lemmas(g, max_n, hooks));

        for (EdgeId e = 0; e < g.edge_count(); ++e)
            for (int length : {3, 5}) {
                auto r = verify_lemma6_roundtrip(g, e, length, max_n, hooks);
                if (!r.applicable) continue;
                ++l6.instances_checked;
                if (!r.ok)
                    l6.note(g, "edge " + std::to_string(e) + ", length " +
                                   std::to_string(length) + ": " + r.detail);
            }

        // Claim 1: deleting one copy of a parallel pair only shrinks RE
        auto mult = detail::multiplicity_matrix(g);
        const auto nn = static_cast<std::size_t>(g.vertex_count());
        const auto re_g = hooks.removable(g, max_n);
        for (EdgeId e1 = 0; e1 < g.edge_count(); ++e1) {
            auto [u, v] = g.edges()[static_cast<std::size_t>(e1)];
            if (mult[static_cast<std::size_t>(u) * nn + static_cast<std::size_t>(v)] < 2)
                continue;
            ++c1.instances_checked;
            MultiGraph gd = delete_edge(g, e1);
            if (!is_matching_covered(gd, max_n)) {
                c1.note(g, "deleting parallel edge " + std::to_string(e1) +
                               " broke matching covered");
                continue;
            }
            for (EdgeId f : hooks.removable(gd, max_n).edges) {
                const EdgeId orig = f < e1 ? f : f + 1;  // deletion id remap
                if (!re_g.contains(orig)) {
                    c1.note(g, "RE(G - e1) not contained in RE(G): edge " +
                                   std::to_string(orig));
                    break;
                }
            }
        }
    }

    return {l1, l2, tc.l3, tc.l4, tc.l5, l6, c1, tc.invariance, four_vertex_census(max_n)};
}

// Tightness certification against the enumeration oracle: every proper shore
// containing vertex 0 (each cut once), both parities, compared with counting
// |M ∩ C| over all perfect matchings. Also collects the nontrivial tight
// cuts it encounters, which the corpus sweep reuses.
struct TightnessAudit {
    long cuts_checked = 0;
    std::vector<LemmaViolation> mismatches;
    std::vector<Cut> tight_cuts;  // per graph: nontrivial, shore contains vertex 0
    void merge(TightnessAudit&& o) {
        cuts_checked += o.cuts_checked;
        for (auto& v : o.mismatches) mismatches.push_back(std::move(v));
    }
};

namespace detail {

// Perfect matchings as edge-id bitmasks, by direct backtracking (the same
// enumeration route as enumerate_perfect_matchings, without the sorting).
inline void enumerate_pm_masks(const MultiGraph& g, std::vector<std::uint64_t>& out) {
    out.clear();
    const int n = g.vertex_count();
    if (n == 0 || n % 2 != 0) return;
    int head[17] = {};
    for (auto [u, v] : g.edges()) {
        ++head[u + 1];
        ++head[v + 1];
    }
    for (int v = 0; v < n; ++v) head[v + 1] += head[v];
    int cursor[16];
    std::copy(head, head + n, cursor);
    std::pair<std::uint8_t, std::uint8_t> inc[128];  // (other end, edge id)
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[static_cast<std::size_t>(e)];
        inc[cursor[u]++] = {static_cast<std::uint8_t>(v), static_cast<std::uint8_t>(e)};
        inc[cursor[v]++] = {static_cast<std::uint8_t>(u), static_cast<std::uint8_t>(e)};
    }
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    auto recurse = [&](auto&& self, std::uint32_t covered, std::uint64_t edges) -> void {
        if (covered == full) {
            out.push_back(edges);
            return;
        }
        const int v = std::countr_zero(~covered);
        for (int i = head[v]; i < head[v + 1]; ++i) {
            const int w = inc[i].first;
            if (covered & (std::uint32_t{1} << w)) continue;
            self(self, covered | (std::uint32_t{1} << v) | (std::uint32_t{1} << w),
                 edges | (std::uint64_t{1} << inc[i].second));
        }
    };
    recurse(recurse, 0, 0);
}

}  // namespace detail

inline TightnessAudit audit_tightness(const MultiGraph& g, int max_n = kDefaultMaxN) {
    TightnessAudit out;
    MatchingEngine eng(g, max_n);
    if (!eng.is_matching_covered()) return out;
    const int n = g.vertex_count();
    const int m = g.edge_count();
    if (m > 64) throw cap_exceeded("audit_tightness: more than 64 edges");
    if (n > 16) throw cap_exceeded("audit_tightness: more than 16 vertices");

    thread_local std::vector<std::uint64_t> pm_masks;
    detail::enumerate_pm_masks(g, pm_masks);

    std::uint64_t incident[16] = {};  // vertex -> edge-id mask
    std::uint32_t ends[64];           // edge -> endpoint mask
    for (EdgeId e = 0; e < m; ++e) {
        auto [u, v] = g.edges()[static_cast<std::size_t>(e)];
        incident[u] |= std::uint64_t{1} << e;
        incident[v] |= std::uint64_t{1} << e;
        ends[e] = (std::uint32_t{1} << u) | (std::uint32_t{1} << v);
    }
    const std::uint32_t full = eng.full_mask();

    // Gray-code walk over the shores containing vertex 0: one vertex flips
    // per step, so the cut's edge-id mask updates in O(degree).
    std::uint32_t shore = 1;
    std::uint64_t cut_mask = incident[0];
    int size = 1;
    int cut_edges[64];

    const std::uint32_t steps = std::uint32_t{1} << (n - 1);
    for (std::uint32_t k = 0;;) {
        if (size == n) {  // the full vertex set is not a shore
            if (++k == steps) break;
            const int flip = std::countr_zero(k) + 1;
            shore ^= std::uint32_t{1} << flip;
            size += (shore >> flip) & 1u ? 1 : -1;
            cut_mask ^= incident[flip];
            continue;
        }
        ++out.cuts_checked;

        bool oracle_tight = true;
        for (std::uint64_t pm : pm_masks)
            if (std::popcount(pm & cut_mask) != 1) {
                oracle_tight = false;
                break;
            }

        bool certified = false;
        if (size % 2 == 1) {  // even shores fail by parity
            certified = true;
            int cut_size = 0;
            for (std::uint64_t b = cut_mask; b; b &= b - 1)
                cut_edges[cut_size++] = std::countr_zero(b);
            for (int i = 0; i < cut_size && certified; ++i)
                for (int j = i + 1; j < cut_size; ++j) {
                    const std::uint32_t pair = ends[cut_edges[i]] | ends[cut_edges[j]];
                    if (std::popcount(pair) != 4) continue;  // edges share a vertex
                    if (eng.matchable(full & ~pair)) {
                        certified = false;
                        break;
                    }
                }
            if (certified && size >= 3 && size <= n - 3) {
                Cut c{VertexSet(shore), {}};
                for (std::uint64_t b = cut_mask; b; b &= b - 1)
                    c.edges.push_back(std::countr_zero(b));
                out.tight_cuts.push_back(std::move(c));
            }
        }
        if (certified != oracle_tight)
            out.mismatches.push_back(
                {to_sparse6(g), "shore " + std::to_string(shore) + ": pair test says " +
                                    (certified ? "tight" : "not tight") +
                                    ", enumeration disagrees"});

        if (++k == steps) break;
        const int flip = std::countr_zero(k) + 1;
        shore ^= std::uint32_t{1} << flip;
        size += (shore >> flip) & 1u ? 1 : -1;
        cut_mask ^= incident[flip];
    }
    // the Gray walk visits shores out of scan order; normalize
    std::sort(out.tight_cuts.begin(), out.tight_cuts.end(),
              [](const Cut& a, const Cut& b) {
                  const int ca = a.shore.count(), cb = b.shore.count();
                  return ca != cb ? ca < cb : a.shore.bits < b.shore.bits;
              });
    return out;
}

// Sharpness and necessity witnesses: hypothesis-satisfying graphs attaining
// the bound exactly, plus near-bricks that fail the hypothesis and fall
// short of it.
// Everything the corpus sweep wants about one graph, computed in a single
// pass: the analysis core, the tightness audit (whose tight-cut list feeds
// the lemma checks and b), brace properties and the brick-test cross-check.
// Field-by-field it matches what the standalone functions return; the test
// suite pins that equivalence.
struct CorpusGraphReport {
    AnalysisCore core;
    TightnessAudit audit;
    TightCutLemmaChecks lemma_checks;
    bool brace_on_six_plus = false;
    bool l1_holds = true;  // braces on >= 6 vertices: every edge removable
    bool l2_holds = true;  // braces on >= 6 vertices: 3-connected
    bool elp_consistent = true;
};

inline CorpusGraphReport corpus_graph_report(const MultiGraph& g,
                                             int max_n = kDefaultMaxN,
                                             const LemmaHooks& hooks = {}) {
    CorpusGraphReport r;
    AnalysisCore& core = r.core;
    core.n = g.vertex_count();
    core.m = g.edge_count();
    if (core.n == 0) return r;
    core.delta = max_degree(g);
    core.simple = is_simple(g);
    core.bipartite = is_bipartite(g);
    core.irreducible = is_irreducible(g);

    MatchingEngine eng(g, max_n);
    core.matching_covered = eng.is_matching_covered();
    if (!core.matching_covered) return r;

    core.brick_elp = core.n >= 4 && core.n % 2 == 0 && is_k_connected(g, 3) &&
                     eng.is_bicritical();
    if (core.simple) {
        if (core.n == 4 && core.m == 6)
            core.excluded_k4 = are_isomorphic(g, graphs::k4());
        if (core.n == 6 && core.m == 9 && !core.bipartite)
            core.excluded_c6bar = are_isomorphic(g, graphs::c6_bar());
    }

    RemovableEdgeSet re = hooks.removable(g, max_n);
    core.removable_count = static_cast<int>(re.edges.size());

    r.audit = audit_tightness(g, max_n);
    const auto& cuts = r.audit.tight_cuts;
    if (cuts.empty()) {
        core.b = core.bipartite ? 0 : 1;
    } else {
        const VertexSet shore = *detail::select_decomposition_shore(g, cuts);
        core.b = detail::brick_count_impl(contract_shore(g, shore).graph, max_n) +
                 detail::brick_count_impl(
                     contract_shore(g, shore.complement(core.n)).graph, max_n);
        r.lemma_checks = detail::tight_cut_lemmas_impl(g, cuts, re, *core.b, max_n, hooks);
    }

    if (core.bipartite && cuts.empty() && core.n >= 6) {
        r.brace_on_six_plus = true;
        r.l1_holds = *core.removable_count == core.m;
        r.l2_holds = is_k_connected(g, 3);
    }
    r.elp_consistent = core.brick_elp == (!core.bipartite && cuts.empty());
    return r;
}

struct ExtremalHit {
    MultiGraph graph;
    TheoremVerdict verdict;
};

inline std::vector<ExtremalHit> extremal_search(const std::vector<MultiGraph>& corpus,
                                                int max_n = kDefaultMaxN) {
    std::vector<ExtremalHit> out;
    for (const auto& g : corpus) {
        AnalysisCore core = analyze_core(g, max_n);
        if (!core.matching_covered) continue;
        TheoremVerdict v = theorem2_verdict(core);
        const int target = core.delta - 2;
        if (v.hypothesis_holds && *core.removable_count == target)
            out.push_back({g, std::move(v)});
        else if (!v.hypothesis_holds && core.b == 1 && *core.removable_count < target)
            out.push_back({g, std::move(v)});
    }
    return out;
}

}  // namespace brickyard
