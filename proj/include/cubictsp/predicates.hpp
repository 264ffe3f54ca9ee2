#pragma once

// Structural predicates: connectivity levels, bipartiteness, the
// "truly bipartite" property of 2-poles, and the stub-permutation
// symmetry of 3-poles.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "cubictsp/graph.hpp"
#include "cubictsp/pole.hpp"

namespace cubictsp {

enum class Tristate { no, yes, unknown };

namespace detail {

// Lowpoint DFS over g with one optional vertex excluded. Assumes the
// remaining graph is connected; if it is not, the excluded vertex was a
// cut vertex, which callers rule out beforehand.
inline bool has_cut_vertex(const Graph& g, int skip) {
    const int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0);
    int timer = 0;
    bool found = false;
    auto dfs = [&](auto&& self, int v, int parent) -> void {
        disc[v] = low[v] = timer++;
        int children = 0;
        for (int w : g.neighbors(v)) {
            if (w == skip || found) continue;
            if (disc[w] == -1) {
                ++children;
                self(self, w, v);
                low[v] = std::min(low[v], low[w]);
                if (parent != -1 && low[w] >= disc[v]) found = true;
            } else if (w != parent) {
                low[v] = std::min(low[v], disc[w]);
            }
        }
        if (parent == -1 && children > 1) found = true;
    };
    int root = (skip == 0) ? 1 : 0;
    if (root >= n) return false;
    dfs(dfs, root, -1);
    return found;
}

// Bridge detection with one optional edge excluded.
inline bool has_bridge(const Graph& g, int skip_edge) {
    const int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0);
    int timer = 0;
    bool found = false;
    auto dfs = [&](auto&& self, int v, int parent_edge) -> void {
        disc[v] = low[v] = timer++;
        for (int w : g.neighbors(v)) {
            if (found) return;
            int eid = g.edge_index(make_edge(v, w));
            if (eid == skip_edge || eid == parent_edge) continue;
            if (disc[w] == -1) {
                self(self, w, eid);
                low[v] = std::min(low[v], low[w]);
                if (low[w] > disc[v]) found = true;
            } else {
                low[v] = std::min(low[v], disc[w]);
            }
        }
    };
    for (int v = 0; v < n && !found; ++v)
        if (disc[v] == -1) dfs(dfs, v, -1);
    return found;
}

// 2-coloring per connected component. Returns colors and component ids,
// or nothing if some component has an odd circuit.
struct Bipartition {
    std::vector<int> color;
    std::vector<int> component;
};

inline std::optional<Bipartition> bipartition(const Graph& g) {
    const int n = g.vertex_count();
    Bipartition b{std::vector<int>(n, -1), std::vector<int>(n, -1)};
    int comps = 0;
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        if (b.color[s] != -1) continue;
        b.color[s] = 0;
        b.component[s] = comps;
        queue.assign(1, s);
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            for (int w : g.neighbors(v)) {
                if (b.color[w] == -1) {
                    b.color[w] = 1 - b.color[v];
                    b.component[w] = comps;
                    queue.push_back(w);
                } else if (b.color[w] == b.color[v]) {
                    return std::nullopt;
                }
            }
        }
        ++comps;
    }
    return b;
}

}  // namespace detail

// Largest k in {0,1,2,3} such that g is k-connected (k-connected: more
// than k vertices and no vertex cut of size below k). For cubic graphs
// the interesting ceiling is 3.
inline int connectivity_level(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2 || !is_connected(g)) return 0;
    if (n < 3 || detail::has_cut_vertex(g, -1)) return 1;
    if (n < 4) return 2;
    for (int v = 0; v < n; ++v)
        if (detail::has_cut_vertex(g, v)) return 2;
    return 3;
}

// Edge-connectivity analogue, also capped at 3.
inline int edge_connectivity_level(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2 || !is_connected(g)) return 0;
    if (detail::has_bridge(g, -1)) return 1;
    for (int e = 0; e < g.edge_count(); ++e)
        if (detail::has_bridge(g, e)) return 2;
    return 3;
}

inline bool is_bipartite(const Graph& g) {
    return detail::bipartition(g).has_value();
}

// A 2-pole is truly bipartite when its inner graph has no odd circuit and
// every inner path between the two stub vertices has an even number of
// vertices, i.e. some proper 2-coloring separates the stub vertices.
inline bool is_truly_bipartite(const Pole& p) {
    if (p.arity() != 2) throw ArityError("is_truly_bipartite requires a 2-pole");
    auto b = detail::bipartition(p.inner());
    if (!b) return false;
    const int s0 = p.stubs()[0], s1 = p.stubs()[1];
    if (b->component[s0] != b->component[s1]) return true;  // no stub-to-stub path at all
    return b->color[s0] != b->color[s1];
}

namespace detail {

// Backtracking search for an automorphism of g mapping from[i] to to[i].
// Adjacency is kept as bitmasks, so this supports at most 32 vertices.
inline bool constrained_automorphism_exists(const Graph& g, const std::vector<int>& from,
                                            const std::vector<int>& to) {
    const int n = g.vertex_count();
    std::vector<std::uint32_t> adj_mask(n, 0);
    for (const auto& [u, v] : g.edges()) {
        adj_mask[u] |= std::uint32_t{1} << v;
        adj_mask[v] |= std::uint32_t{1} << u;
    }
    std::vector<int> image(n, -1), preimage(n, -1);
    for (std::size_t i = 0; i < from.size(); ++i) {
        int u = from[i], w = to[i];
        if (image[u] != -1 && image[u] != w) return false;
        if (preimage[w] != -1 && preimage[w] != u) return false;
        if (g.degree(u) != g.degree(w)) return false;
        image[u] = w;
        preimage[w] = u;
    }
    // Consistency among the seeded pairs.
    for (int u = 0; u < n; ++u) {
        if (image[u] == -1) continue;
        for (int v = u + 1; v < n; ++v) {
            if (image[v] == -1) continue;
            bool a = (adj_mask[u] >> v) & 1;
            bool b = (adj_mask[image[u]] >> image[v]) & 1;
            if (a != b) return false;
        }
    }
    auto extend = [&](auto&& self, int v) -> bool {
        while (v < n && image[v] != -1) ++v;
        if (v == n) return true;
        for (int c = 0; c < n; ++c) {
            if (preimage[c] != -1 || g.degree(c) != g.degree(v)) continue;
            bool ok = true;
            for (int w = 0; w < n && ok; ++w) {
                if (image[w] == -1) continue;
                bool a = (adj_mask[v] >> w) & 1;
                bool b = (adj_mask[c] >> image[w]) & 1;
                if (a != b) ok = false;
            }
            if (!ok) continue;
            image[v] = c;
            preimage[c] = v;
            if (self(self, v + 1)) return true;
            image[v] = -1;
            preimage[c] = -1;
        }
        return false;
    };
    return extend(extend, 0);
}

}  // namespace detail

// A 3-pole is symmetric when every permutation of its three dangling edges
// is realized by an automorphism of the inner graph. The exhaustive search
// is limited to inner graphs of at most max_inner_vertices; larger poles
// report unknown instead of guessing.
inline Tristate is_symmetric_3pole(const Pole& p, int max_inner_vertices = 16) {
    if (p.arity() != 3) throw ArityError("is_symmetric_3pole requires a 3-pole");
    if (p.vertex_count() > max_inner_vertices || p.vertex_count() > 32)
        return Tristate::unknown;
    const auto& at = p.stubs();
    std::array<std::array<int, 3>, 6> perms = {
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    for (const auto& perm : perms) {
        std::vector<int> from = {at[0], at[1], at[2]};
        std::vector<int> to = {at[perm[0]], at[perm[1]], at[perm[2]]};
        if (!detail::constrained_automorphism_exists(p.inner(), from, to))
            return Tristate::no;
    }
    return Tristate::yes;
}

}  // namespace cubictsp
