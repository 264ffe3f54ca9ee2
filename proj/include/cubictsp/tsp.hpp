#pragma once

// Exact graphic TSP for connected simple cubic graphs. A shortest closed
// spanning walk has length n - 2 + q where q is the minimum excess over
// even factors: the single-use edges of an optimal tour form the circuits
// of a factor, the doubled edges a spanning tree of the contracted graph.
// The converse is constructive and implemented here: contract the
// circuits of any even factor, double a spanning tree of the contraction,
// and walk the resulting Eulerian multigraph.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "cubictsp/constructions.hpp"
#include "cubictsp/error.hpp"
#include "cubictsp/even_factor.hpp"
#include "cubictsp/graph.hpp"

namespace cubictsp {

struct Tour {
    std::vector<int> walk;  // closed: walk.front() == walk.back()
    int length = 0;         // number of edge traversals == walk.size() - 1
};

// Checks every tour invariant against its host graph; throws on violation.
inline void validate_tour(const Graph& g, const Tour& t) {
    if (t.walk.size() < 2 || t.walk.front() != t.walk.back())
        throw Error("tour walk is not closed");
    if (t.length != static_cast<int>(t.walk.size()) - 1)
        throw Error("tour length disagrees with its walk");
    std::vector<char> covered(g.vertex_count(), 0);
    std::vector<int> uses(g.edge_count(), 0);
    for (std::size_t i = 0; i + 1 < t.walk.size(); ++i) {
        int u = t.walk[i], v = t.walk[i + 1];
        int e = g.edge_index(make_edge(u, v));
        if (u == v || e < 0)
            throw Error("tour step " + std::to_string(u) + " -> " + std::to_string(v) +
                        " is not an edge");
        if (++uses[e] > 2)
            throw Error("tour traverses edge {" + std::to_string(g.edges()[e].first) + ", " +
                        std::to_string(g.edges()[e].second) + "} more than twice");
        covered[u] = 1;
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!covered[v]) throw Error("tour misses vertex " + std::to_string(v));
}

// Turns an even factor into a closed spanning walk of length
// n - 2 + 2c + v: contract each circuit, take a breadth-first spanning
// tree of the contraction rooted at the lowest supernode, double its
// edges, and extract an Eulerian circuit (Hierholzer, lowest-id
// successor) of circuit edges plus doubled tree edges.
inline Tour tour_from_even_factor(const Graph& g, const EvenFactor& f) {
    factor_stats(g, f);  // validates the factor
    const int n = g.vertex_count();
    if (n == 0 || !is_connected(g)) throw NoTourError("graph is not connected");

    std::vector<char> sel(g.edge_count(), 0);
    for (int e : f.edge_ids) sel[e] = 1;

    // Supernode of every vertex: its circuit's component, keyed by the
    // smallest member vertex, or the vertex itself when isolated.
    std::vector<int> super(n, -1);
    std::vector<std::vector<int>> members;
    for (int s = 0; s < n; ++s) {
        if (super[s] != -1) continue;
        std::vector<int> comp = {s};
        super[s] = static_cast<int>(members.size());
        for (std::size_t qi = 0; qi < comp.size(); ++qi) {
            int v = comp[qi];
            for (int w : g.neighbors(v)) {
                int e = g.edge_index(make_edge(v, w));
                if (sel[e] && super[w] == -1) {
                    super[w] = super[s];
                    comp.push_back(w);
                }
            }
        }
        members.push_back(std::move(comp));
    }

    // Spanning tree of the contraction, breadth-first from supernode 0;
    // cross edges are visited in lexicographic edge order.
    const int ns = static_cast<int>(members.size());
    std::vector<std::vector<int>> cross(ns);  // edge ids leaving each supernode
    for (int e = 0; e < g.edge_count(); ++e) {
        if (sel[e]) continue;
        auto [u, v] = g.edges()[e];
        if (super[u] != super[v]) {
            cross[super[u]].push_back(e);
            cross[super[v]].push_back(e);
        }
    }
    std::vector<int> tree_edges;
    std::vector<char> reached(ns, 0);
    std::vector<int> queue = {0};
    reached[0] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int s = queue[qi];
        for (int e : cross[s]) {
            auto [u, v] = g.edges()[e];
            int t = super[u] == s ? super[v] : super[u];
            if (!reached[t]) {
                reached[t] = 1;
                tree_edges.push_back(e);
                queue.push_back(t);
            }
        }
    }

    // Eulerian multigraph: circuit edges once, tree edges twice.
    std::vector<std::vector<std::pair<int, int>>> madj(n);  // (neighbor, instance)
    int instances = 0;
    auto add_instance = [&](int e) {
        auto [u, v] = g.edges()[e];
        madj[u].emplace_back(v, instances);
        madj[v].emplace_back(u, instances);
        ++instances;
    };
    for (int e = 0; e < g.edge_count(); ++e)
        if (sel[e]) add_instance(e);
    for (int e : tree_edges) {
        add_instance(e);
        add_instance(e);
    }
    for (auto& lst : madj) std::sort(lst.begin(), lst.end());

    std::vector<char> used(instances, 0);
    std::vector<std::size_t> next(n, 0);
    std::vector<int> stack = {0}, path;
    while (!stack.empty()) {
        int v = stack.back();
        while (next[v] < madj[v].size() && used[madj[v][next[v]].second]) ++next[v];
        if (next[v] == madj[v].size()) {
            path.push_back(v);
            stack.pop_back();
        } else {
            auto [w, inst] = madj[v][next[v]];
            used[inst] = 1;
            stack.push_back(w);
        }
    }
    std::reverse(path.begin(), path.end());
    return Tour{std::move(path), instances};
}

struct TspResult {
    int length = 0;
    Tour witness_tour;
    EvenFactor witness_factor;
};

// Exact graphic-TSP length with a realizing tour.
inline TspResult tsp_length(const Graph& g, const SolveOptions& opts = {}) {
    if (!validate_cubic(g)) throw StructuralError("tsp_length requires a simple cubic graph");
    if (!is_connected(g)) throw NoTourError("disconnected graph has no spanning closed walk");
    MinExcess best = min_excess(g, opts);
    Tour tour = tour_from_even_factor(g, best.witness);
    return {g.vertex_count() - 2 + best.excess, std::move(tour), std::move(best.witness)};
}

// Independent oracle: all-pairs shortest paths, then Held-Karp subset
// dynamic programming for the optimal Hamiltonian cycle of the metric
// closure, whose cost equals the graphic-TSP length.
inline int held_karp_tsp(const Graph& g, int max_vertices = 18) {
    const int n = g.vertex_count();
    if (n > max_vertices)
        throw ResourceBoundError("held_karp_tsp oracle limited to " +
                                 std::to_string(max_vertices) + " vertices, got " +
                                 std::to_string(n));
    if (!is_connected(g)) throw NoTourError("disconnected graph has no spanning closed walk");
    if (n <= 1) return 0;

    std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
    for (int s = 0; s < n; ++s) {
        dist[s][s] = 0;
        std::vector<int> queue = {s};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int w : g.neighbors(v)) {
                if (dist[s][w] == -1) {
                    dist[s][w] = dist[s][v] + 1;
                    queue.push_back(w);
                }
            }
        }
    }

    const int full = (1 << n) - 1;
    const int inf = INT_MAX / 4;
    std::vector<std::int32_t> dp(static_cast<std::size_t>(1 << n) * n, inf);
    dp[static_cast<std::size_t>(1) * n + 0] = 0;  // mask {0}, ending at 0
    for (int mask = 1; mask <= full; ++mask) {
        if (!(mask & 1)) continue;
        for (int j = 0; j < n; ++j) {
            const std::int32_t cur = dp[static_cast<std::size_t>(mask) * n + j];
            if (cur >= inf || !(mask & (1 << j))) continue;
            for (int k = 0; k < n; ++k) {
                if (mask & (1 << k)) continue;
                const int nm = mask | (1 << k);
                std::int32_t& cell = dp[static_cast<std::size_t>(nm) * n + k];
                if (cur + dist[j][k] < cell) cell = cur + dist[j][k];
            }
        }
    }
    int best = inf;
    for (int j = 1; j < n; ++j) {
        const std::int32_t cur = dp[static_cast<std::size_t>(full) * n + j];
        if (cur < inf) best = std::min(best, cur + dist[j][0]);
    }
    return best;
}

// The lower bound on the TSP length of the closed family graph, from the
// closed forms alone: |V| - 2 + (excess_param + 2).
inline std::int64_t family_lower_bound(FamilyId id) {
    if (id.kind == FamilyKind::threeconn_petersen && id.k < 1)
        throw DomainError("the Petersen family closes to a simple graph only for k >= 1");
    ClosedForm cf = closed_form(id.kind, id.k);
    std::int64_t closed_vertices = cf.pole_vertices;
    switch (id.kind) {
        case FamilyKind::planar_k4: closed_vertices += 4; break;
        case FamilyKind::bipartite_k33: closed_vertices += 6; break;
        case FamilyKind::threeconn_petersen: closed_vertices += 1; break;
    }
    return closed_vertices + cf.excess_param;
}

}  // namespace cubictsp
