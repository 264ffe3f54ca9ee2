#pragma once

// Exact planarity testing via the face-embedding algorithm of Demoucron,
// Malgrange and Pertuiset: embed an initial cycle, then repeatedly place a
// path of some remaining fragment into a face containing all of the
// fragment's attachment vertices, always serving a fragment with the
// fewest admissible faces first. A fragment with no admissible face
// certifies non-planarity. Quadratic-ish, which is plenty at desk scale.

#include <algorithm>
#include <utility>
#include <vector>

#include "cubictsp/graph.hpp"

namespace cubictsp {
namespace detail {

inline std::vector<std::vector<Edge>> biconnected_blocks(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<int> edge_stack;
    std::vector<std::vector<Edge>> blocks;
    int timer = 0;
    auto dfs = [&](auto&& self, int v, int parent_edge) -> void {
        disc[v] = low[v] = timer++;
        for (int w : g.neighbors(v)) {
            int eid = g.edge_index(make_edge(v, w));
            if (eid == parent_edge) continue;
            if (disc[w] == -1) {
                edge_stack.push_back(eid);
                self(self, w, eid);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= disc[v]) {
                    std::vector<Edge> block;
                    while (true) {
                        int top = edge_stack.back();
                        edge_stack.pop_back();
                        block.push_back(g.edges()[top]);
                        if (top == eid) break;
                    }
                    blocks.push_back(std::move(block));
                }
            } else if (disc[w] < disc[v]) {
                edge_stack.push_back(eid);
                low[v] = std::min(low[v], disc[w]);
            }
        }
    };
    for (int v = 0; v < n; ++v)
        if (disc[v] == -1) dfs(dfs, v, -1);
    return blocks;
}

// DMP on one biconnected block, given as an edge list over arbitrary ids.
inline bool dmp_block_planar(const std::vector<Edge>& block_edges) {
    if (block_edges.size() <= 3) return true;

    // Relabel to a dense local id space.
    std::vector<int> ids;
    for (const auto& [u, v] : block_edges) {
        ids.push_back(u);
        ids.push_back(v);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    auto local = [&](int v) {
        return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
    };
    const int n = static_cast<int>(ids.size());
    const int m = static_cast<int>(block_edges.size());
    if (n < 5) return true;
    if (m > 3 * n - 6) return false;

    std::vector<Edge> edges(m);
    for (int e = 0; e < m; ++e)
        edges[e] = make_edge(local(block_edges[e].first), local(block_edges[e].second));
    std::sort(edges.begin(), edges.end());
    auto edge_id = [&](int u, int v) {
        return static_cast<int>(
            std::lower_bound(edges.begin(), edges.end(), make_edge(u, v)) - edges.begin());
    };
    std::vector<std::vector<int>> adj(n);
    for (const auto& [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }

    // Initial cycle from the first back edge of a DFS.
    std::vector<int> parent(n, -1), disc(n, -1);
    std::vector<int> cycle;
    int timer = 0;
    auto find_cycle = [&](auto&& self, int v) -> bool {
        disc[v] = timer++;
        for (int w : adj[v]) {
            if (w == parent[v]) continue;
            if (disc[w] == -1) {
                parent[w] = v;
                if (self(self, w)) return true;
            } else if (disc[w] < disc[v]) {
                for (int x = v; x != w; x = parent[x]) cycle.push_back(x);
                cycle.push_back(w);
                return true;
            }
        }
        return false;
    };
    find_cycle(find_cycle, 0);

    std::vector<std::vector<int>> faces = {cycle, cycle};
    std::vector<char> in_h(n, 0), embedded(m, 0);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        in_h[cycle[i]] = 1;
        embedded[edge_id(cycle[i], cycle[(i + 1) % cycle.size()])] = 1;
    }
    int remaining = m - static_cast<int>(cycle.size());

    struct Fragment {
        std::vector<int> attachments;  // H-vertices, deduplicated
        int component = -1;            // -1 for a chord fragment
        Edge chord{-1, -1};
        int admissible = 0;
        int face = -1;  // one admissible face
    };

    std::vector<int> comp(n), stamp(n, -1);
    while (remaining > 0) {
        // Fragments: chords between embedded vertices, and components of
        // the not-yet-embedded vertices together with their attachments.
        std::fill(comp.begin(), comp.end(), -1);
        int ncomp = 0;
        for (int s = 0; s < n; ++s) {
            if (in_h[s] || comp[s] != -1) continue;
            std::vector<int> queue = {s};
            comp[s] = ncomp;
            while (!queue.empty()) {
                int v = queue.back();
                queue.pop_back();
                for (int w : adj[v]) {
                    if (!in_h[w] && comp[w] == -1) {
                        comp[w] = ncomp;
                        queue.push_back(w);
                    }
                }
            }
            ++ncomp;
        }
        std::vector<Fragment> fragments(ncomp);
        for (int c = 0; c < ncomp; ++c) fragments[c].component = c;
        for (int e = 0; e < m; ++e) {
            if (embedded[e]) continue;
            auto [u, v] = edges[e];
            if (in_h[u] && in_h[v]) {
                Fragment f;
                f.attachments = {u, v};
                f.chord = edges[e];
                fragments.push_back(f);
            } else if (in_h[u]) {
                fragments[comp[v]].attachments.push_back(u);
            } else if (in_h[v]) {
                fragments[comp[u]].attachments.push_back(v);
            }
        }
        for (auto& f : fragments) {
            std::sort(f.attachments.begin(), f.attachments.end());
            f.attachments.erase(std::unique(f.attachments.begin(), f.attachments.end()),
                                f.attachments.end());
        }

        for (std::size_t fi = 0; fi < faces.size(); ++fi) {
            for (int v : faces[fi]) stamp[v] = static_cast<int>(fi);
            for (auto& f : fragments) {
                bool ok = true;
                for (int a : f.attachments)
                    if (stamp[a] != static_cast<int>(fi)) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    ++f.admissible;
                    f.face = static_cast<int>(fi);
                }
            }
        }

        Fragment* pick = nullptr;
        for (auto& f : fragments)
            if (pick == nullptr || f.admissible < pick->admissible) pick = &f;
        if (pick == nullptr) return true;  // no fragments left (remaining was stale)
        if (pick->admissible == 0) return false;

        // A path through the fragment between two distinct attachments.
        std::vector<int> alpha;
        if (pick->component == -1) {
            alpha = {pick->chord.first, pick->chord.second};
        } else {
            int a = pick->attachments[0];
            std::vector<int> par(n, -2);
            std::vector<int> queue;
            for (int w : adj[a])
                if (!in_h[w] && comp[w] == pick->component && par[w] == -2) {
                    par[w] = a;
                    queue.push_back(w);
                }
            int b = -1;
            for (std::size_t qi = 0; qi < queue.size() && b == -1; ++qi) {
                int v = queue[qi];
                for (int w : adj[v]) {
                    if (in_h[w]) {
                        if (w != a) {
                            // reconstruct a .. v, then w
                            std::vector<int> rev = {w, v};
                            for (int x = par[v]; x != a; x = par[x]) rev.push_back(x);
                            rev.push_back(a);
                            alpha.assign(rev.rbegin(), rev.rend());
                            b = w;
                            break;
                        }
                    } else if (par[w] == -2) {
                        par[w] = v;
                        queue.push_back(w);
                    }
                }
            }
        }

        // Split the chosen face along alpha.
        std::vector<int>& face = faces[pick->face];
        const int len = static_cast<int>(face.size());
        int i = -1, j = -1;
        for (int t = 0; t < len; ++t) {
            if (face[t] == alpha.front()) i = t;
            if (face[t] == alpha.back()) j = t;
        }
        std::vector<int> f1, f2;
        for (int t = i;; t = (t + 1) % len) {
            f1.push_back(face[t]);
            if (t == j) break;
        }
        for (std::size_t t = alpha.size() - 2; t >= 1; --t) f1.push_back(alpha[t]);
        for (int t = j;; t = (t + 1) % len) {
            f2.push_back(face[t]);
            if (t == i) break;
        }
        for (std::size_t t = 1; t + 1 < alpha.size(); ++t) f2.push_back(alpha[t]);

        for (std::size_t t = 0; t + 1 < alpha.size(); ++t) {
            embedded[edge_id(alpha[t], alpha[t + 1])] = 1;
            in_h[alpha[t]] = 1;
            --remaining;
        }
        in_h[alpha.back()] = 1;
        faces[pick->face] = std::move(f1);
        faces.push_back(std::move(f2));
    }
    return true;
}

}  // namespace detail

// Exact planarity for simple graphs: a graph is planar iff every
// biconnected block is.
inline bool is_planar(const Graph& g) {
    if (g.vertex_count() < 5) return true;
    for (const auto& block : detail::biconnected_blocks(g))
        if (!detail::dmp_block_planar(block)) return false;
    return true;
}

}  // namespace cubictsp
