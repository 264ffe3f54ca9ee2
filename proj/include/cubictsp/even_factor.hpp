#pragma once

// Even factors and the excess statistic. An even factor selects a subset
// of edges (plus, for poles, dangling edges) so that every vertex has even
// degree. In a cubic host a factor decomposes into disjoint circuits,
// isolated vertices and, when two dangling edges are selected, one
// stub-to-stub path. The excess is 2*(circuits) + (isolated vertices);
// the path contributes nothing.
//
// Poles are closed internally with an auxiliary apex vertex joined to all
// stubs, so one enumeration core serves closed graphs and poles alike:
// even subgraphs with apex degree 0 are the 0-stub factors, apex degree 2
// the 2-stub factors. Exhaustive enumeration walks the binary cycle space
// in Gray-code order; beyond the subset budget an exact branch-and-bound
// over edge assignments with parity propagation takes over.

#include <algorithm>
#include <array>
#include <bit>
#include <climits>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubictsp/error.hpp"
#include "cubictsp/graph.hpp"
#include "cubictsp/pole.hpp"

namespace cubictsp {

struct EvenFactor {
    std::vector<int> edge_ids;  // indices into the host's sorted edge list
    std::vector<int> stub_ids;  // selected stub positions; empty for closed graphs
    bool operator==(const EvenFactor&) const = default;
};

struct FactorStats {
    int circuits = 0;
    int isolated = 0;
    int excess = 0;  // 2*circuits + isolated
};

struct ExcessTriple {
    int q0 = 0;
    int q2 = 0;
    int n = 0;
    bool operator==(const ExcessTriple&) const = default;
};

struct SolveOptions {
    std::uint64_t max_subsets = std::uint64_t{1} << 28;  // exhaustive scan cap
    std::uint64_t bnb_node_limit = 0;                    // 0 = unbounded
};

enum class StubCount { zero, two, any };

namespace detail {

// Internal enumeration host; stub edges sit at the tail of the edge list
// and may be parallel (several stubs on one attachment vertex).
struct EnumHost {
    int n = 0;
    int apex = -1;
    std::vector<Edge> edges;
    int inner_edges = 0;
    std::vector<std::vector<std::pair<int, int>>> adj;  // (other endpoint, edge id)

    void build_adjacency() {
        adj.assign(n, {});
        for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
            adj[edges[e].first].emplace_back(edges[e].second, e);
            adj[edges[e].second].emplace_back(edges[e].first, e);
        }
    }
};

inline EnumHost host_of(const Graph& g) {
    EnumHost h;
    h.n = g.vertex_count();
    h.edges = g.edges();
    h.inner_edges = g.edge_count();
    h.build_adjacency();
    return h;
}

inline EnumHost host_of(const Pole& p) {
    EnumHost h;
    h.apex = p.vertex_count();
    h.n = p.vertex_count() + 1;
    h.edges = p.inner().edges();
    h.inner_edges = p.inner().edge_count();
    for (int s : p.stubs()) h.edges.emplace_back(s, h.apex);
    h.build_adjacency();
    return h;
}

inline int cycle_space_dimension(const EnumHost& h) {
    std::vector<int> parent(h.n);
    for (int v = 0; v < h.n; ++v) parent[v] = v;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    int comps = h.n;
    for (const auto& [u, v] : h.edges) {
        int ru = find(u), rv = find(v);
        if (ru != rv) {
            parent[ru] = rv;
            --comps;
        }
    }
    return static_cast<int>(h.edges.size()) - h.n + comps;
}

// Fundamental cycles of a BFS spanning forest, as edge-id lists.
inline std::vector<std::vector<int>> fundamental_cycles(const EnumHost& h) {
    std::vector<int> parent_vertex(h.n, -1), parent_edge(h.n, -1), depth(h.n, 0);
    std::vector<char> visited(h.n, 0), tree_edge(h.edges.size(), 0);
    std::vector<int> queue;
    for (int s = 0; s < h.n; ++s) {
        if (visited[s]) continue;
        visited[s] = 1;
        queue.assign(1, s);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (const auto& [w, e] : h.adj[v]) {
                if (!visited[w]) {
                    visited[w] = 1;
                    parent_vertex[w] = v;
                    parent_edge[w] = e;
                    depth[w] = depth[v] + 1;
                    tree_edge[e] = 1;
                    queue.push_back(w);
                }
            }
        }
    }
    std::vector<std::vector<int>> cycles;
    for (int e = 0; e < static_cast<int>(h.edges.size()); ++e) {
        if (tree_edge[e]) continue;
        std::vector<int> cycle = {e};
        int a = h.edges[e].first, b = h.edges[e].second;
        while (a != b) {
            if (depth[a] < depth[b]) std::swap(a, b);
            cycle.push_back(parent_edge[a]);
            a = parent_vertex[a];
        }
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

struct StatsScratch {
    std::vector<int> stamp;
    std::vector<int> stack;
    int epoch = 0;
};

// Circuits and isolated vertices of a selection. Components containing
// the apex are stub-to-stub paths and count for nothing; the apex is not
// a vertex of the pole, so it is never counted as isolated either.
inline FactorStats selection_stats(const EnumHost& h, const std::vector<char>& sel,
                                   const std::vector<int>& deg, StatsScratch& ws) {
    if (ws.stamp.empty()) ws.stamp.assign(h.n, -1);
    ++ws.epoch;
    FactorStats st;
    for (int v = 0; v < h.n; ++v) {
        if (v == h.apex) continue;
        if (deg[v] == 0) {
            ++st.isolated;
            continue;
        }
        if (ws.stamp[v] == ws.epoch) continue;
        bool has_apex = false;
        ws.stamp[v] = ws.epoch;
        ws.stack.assign(1, v);
        while (!ws.stack.empty()) {
            int x = ws.stack.back();
            ws.stack.pop_back();
            if (x == h.apex) has_apex = true;
            for (const auto& [w, e] : h.adj[x]) {
                if (sel[e] && ws.stamp[w] != ws.epoch) {
                    ws.stamp[w] = ws.epoch;
                    ws.stack.push_back(w);
                }
            }
        }
        if (!has_apex) ++st.circuits;
    }
    st.excess = 2 * st.circuits + st.isolated;
    return st;
}

// Gray-code walk over the whole cycle space. visit(stats, stub_mask, sel)
// is called once per even subgraph, the empty one included.
template <class Visit>
inline void scan_even_subgraphs(const EnumHost& h, std::uint64_t max_subsets, Visit&& visit) {
    const int dim = cycle_space_dimension(h);
    if (dim >= 63 || (std::uint64_t{1} << dim) > max_subsets)
        throw ResourceBoundError(
            "cycle space holds 2^" + std::to_string(dim) +
            " even subgraphs, above the enumeration budget of " + std::to_string(max_subsets) +
            "; raise the budget or use the branch-and-bound path (min_excess)");
    const auto cycles = fundamental_cycles(h);
    const int m = static_cast<int>(h.edges.size());
    std::vector<char> sel(m, 0);
    std::vector<int> deg(h.n, 0);
    StatsScratch ws;
    auto stub_mask = [&]() {
        int mask = 0;
        for (int e = h.inner_edges; e < m; ++e)
            if (sel[e]) mask |= 1 << (e - h.inner_edges);
        return mask;
    };
    visit(selection_stats(h, sel, deg, ws), stub_mask(), sel);
    const std::uint64_t total = std::uint64_t{1} << dim;
    for (std::uint64_t s = 1; s < total; ++s) {
        for (int e : cycles[std::countr_zero(s)]) {
            sel[e] ^= 1;
            const int delta = sel[e] ? 1 : -1;
            deg[h.edges[e].first] += delta;
            deg[h.edges[e].second] += delta;
        }
        visit(selection_stats(h, sel, deg, ws), stub_mask(), sel);
    }
}

// Exact branch-and-bound minimisation of the excess over all completions
// of a preset partial assignment. Edges are decided in/out depth-first
// with parity propagation (a vertex with two selected edges excludes its
// remaining edges, a vertex with one selected and one free edge forces
// it). The running cost 2*(closed circuits) + (vertices decided isolated)
// is an admissible bound.
struct BnbResult {
    int excess = 0;
    std::vector<char> sel;
};

class ExcessSearch {
public:
    ExcessSearch(const EnumHost& h, std::uint64_t node_limit)
        : h_(h),
          node_limit_(node_limit),
          state_(h.edges.size(), -1),
          cnt_in_(h.n, 0),
          cnt_free_(h.n, 0),
          uf_parent_(h.n),
          uf_rank_(h.n, 0),
          has_apex_(h.n, 0) {
        for (int v = 0; v < h.n; ++v) uf_parent_[v] = v;
        if (h.apex >= 0) has_apex_[h.apex] = 1;
        for (const auto& [u, v] : h.edges) {
            ++cnt_free_[u];
            ++cnt_free_[v];
        }
        // the parity rules below (two selected edges exclude the rest)
        // hold only when every vertex has degree at most 3
        for (int v = 0; v < h.n; ++v)
            if (cnt_free_[v] > 3)
                throw DomainError("branch-and-bound excess search requires a subcubic host");
        edge_order_ = bfs_edge_order();
    }

    std::optional<BnbResult> solve(const std::vector<std::pair<int, int>>& preset) {
        bool ok = true;
        for (const auto& [e, val] : preset)
            if (!decide(e, val)) {
                ok = false;
                break;
            }
        if (ok) ok = propagate();
        if (ok) dfs(0);
        if (best_excess_ == INT_MAX) return std::nullopt;
        return BnbResult{best_excess_, std::move(best_sel_)};
    }

private:
    struct Decision {
        int edge;
        std::int8_t value;
        int child = -1, parent = -1;
        bool rank_bumped = false;
        char parent_apex_before = 0;
        bool circuit_counted = false;
        int isolated_added = 0;
    };

    std::vector<int> bfs_edge_order() const {
        std::vector<int> order;
        order.reserve(h_.edges.size());
        std::vector<char> seen_v(h_.n, 0), seen_e(h_.edges.size(), 0);
        std::vector<int> queue;
        int start = h_.apex >= 0 ? h_.apex : 0;
        for (int off = 0; off < h_.n; ++off) {
            int s = (start + off) % h_.n;
            if (seen_v[s]) continue;
            seen_v[s] = 1;
            queue.assign(1, s);
            for (std::size_t qi = 0; qi < queue.size(); ++qi) {
                int v = queue[qi];
                for (const auto& [w, e] : h_.adj[v]) {
                    if (!seen_e[e]) {
                        seen_e[e] = 1;
                        order.push_back(e);
                    }
                    if (!seen_v[w]) {
                        seen_v[w] = 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        return order;
    }

    int find(int v) const {
        while (uf_parent_[v] != v) v = uf_parent_[v];
        return v;
    }

    bool decide(int e, int val) {
        if (state_[e] == val) return true;
        if (state_[e] != -1) return false;
        Decision d{e, static_cast<std::int8_t>(val)};
        state_[e] = static_cast<std::int8_t>(val);
        ++decided_;
        const auto [u, v] = h_.edges[e];
        if (val == 1) {
            ++cnt_in_[u];
            ++cnt_in_[v];
            --cnt_free_[u];
            --cnt_free_[v];
            int ru = find(u), rv = find(v);
            if (ru == rv) {
                if (!has_apex_[ru]) {
                    ++circuits_;
                    d.circuit_counted = true;
                }
            } else {
                if (uf_rank_[ru] < uf_rank_[rv]) std::swap(ru, rv);
                uf_parent_[rv] = ru;
                d.child = rv;
                d.parent = ru;
                if (uf_rank_[ru] == uf_rank_[rv]) {
                    ++uf_rank_[ru];
                    d.rank_bumped = true;
                }
                d.parent_apex_before = has_apex_[ru];
                has_apex_[ru] |= has_apex_[rv];
            }
        } else {
            --cnt_free_[u];
            --cnt_free_[v];
            for (int w : {u, v}) {
                if (cnt_in_[w] == 0 && cnt_free_[w] == 0 && w != h_.apex) {
                    ++isolated_;
                    ++d.isolated_added;
                }
            }
        }
        trail_.push_back(d);
        bool feasible = true;
        for (int w : {u, v}) {
            if (cnt_in_[w] > 2 || (cnt_in_[w] % 2 == 1 && cnt_free_[w] == 0)) feasible = false;
            dirty_.push_back(w);
        }
        return feasible;
    }

    bool propagate() {
        while (!dirty_.empty()) {
            int w = dirty_.back();
            dirty_.pop_back();
            if (cnt_in_[w] == 2 && cnt_free_[w] > 0) {
                for (const auto& [x, e] : h_.adj[w]) {
                    (void)x;
                    if (state_[e] == -1 && !decide(e, 0)) return false;
                }
            } else if (cnt_in_[w] == 1 && cnt_free_[w] == 1) {
                for (const auto& [x, e] : h_.adj[w]) {
                    (void)x;
                    if (state_[e] == -1) {
                        if (!decide(e, 1)) return false;
                        break;
                    }
                }
            }
        }
        return true;
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            const Decision& d = trail_.back();
            const auto [u, v] = h_.edges[d.edge];
            if (d.value == 1) {
                --cnt_in_[u];
                --cnt_in_[v];
                ++cnt_free_[u];
                ++cnt_free_[v];
                if (d.child != -1) {
                    uf_parent_[d.child] = d.child;
                    if (d.rank_bumped) --uf_rank_[d.parent];
                    has_apex_[d.parent] = d.parent_apex_before;
                }
                if (d.circuit_counted) --circuits_;
            } else {
                ++cnt_free_[u];
                ++cnt_free_[v];
                isolated_ -= d.isolated_added;
            }
            state_[d.edge] = -1;
            --decided_;
            trail_.pop_back();
        }
    }

    void dfs(int order_hint) {
        if (node_limit_ > 0 && ++nodes_ > node_limit_)
            throw ResourceBoundError("branch-and-bound node budget of " +
                                     std::to_string(node_limit_) + " exhausted");
        const int cost = 2 * circuits_ + isolated_;
        if (cost >= best_excess_) return;
        if (decided_ == static_cast<int>(h_.edges.size())) {
            best_excess_ = cost;
            best_sel_.assign(state_.begin(), state_.end());
            for (auto& b : best_sel_) b = (b == 1);
            return;
        }
        int idx = order_hint;
        while (state_[edge_order_[idx]] != -1) ++idx;
        const int e = edge_order_[idx];
        for (int val : {1, 0}) {
            const std::size_t mark = trail_.size();
            if (decide(e, val) && propagate()) dfs(idx + 1);
            dirty_.clear();
            undo_to(mark);
        }
    }

    const EnumHost& h_;
    std::uint64_t node_limit_;
    std::uint64_t nodes_ = 0;
    std::vector<std::int8_t> state_;
    std::vector<int> cnt_in_, cnt_free_;
    std::vector<int> uf_parent_, uf_rank_;
    std::vector<char> has_apex_;
    std::vector<int> edge_order_;
    std::vector<Decision> trail_;
    std::vector<int> dirty_;
    int decided_ = 0;
    int circuits_ = 0;
    int isolated_ = 0;
    int best_excess_ = INT_MAX;
    std::vector<char> best_sel_;
};

inline std::optional<BnbResult> run_bnb(const EnumHost& h,
                                        const std::vector<std::pair<int, int>>& preset,
                                        std::uint64_t node_limit) {
    ExcessSearch search(h, node_limit);
    return search.solve(preset);
}

inline bool fits_exhaustive(const EnumHost& h, std::uint64_t max_subsets) {
    const int dim = cycle_space_dimension(h);
    return dim < 63 && (std::uint64_t{1} << dim) <= max_subsets;
}

inline EvenFactor factor_from_selection(const EnumHost& h, const std::vector<char>& sel) {
    EvenFactor f;
    for (int e = 0; e < h.inner_edges; ++e)
        if (sel[e]) f.edge_ids.push_back(e);
    for (int e = h.inner_edges; e < static_cast<int>(h.edges.size()); ++e)
        if (sel[e]) f.stub_ids.push_back(e - h.inner_edges);
    return f;
}

inline FactorStats stats_of_factor(const EnumHost& h, const EvenFactor& f, int arity) {
    std::vector<char> sel(h.edges.size(), 0);
    for (int id : f.edge_ids) {
        if (id < 0 || id >= h.inner_edges)
            throw FactorError("factor edge id " + std::to_string(id) + " out of range");
        if (sel[id]) throw FactorError("factor lists edge " + std::to_string(id) + " twice");
        sel[id] = 1;
    }
    for (int s : f.stub_ids) {
        if (s < 0 || s >= arity)
            throw FactorError("factor stub id " + std::to_string(s) + " out of range");
        if (sel[h.inner_edges + s])
            throw FactorError("factor lists stub " + std::to_string(s) + " twice");
        sel[h.inner_edges + s] = 1;
    }
    std::vector<int> deg(h.n, 0);
    for (int e = 0; e < static_cast<int>(h.edges.size()); ++e) {
        if (!sel[e]) continue;
        ++deg[h.edges[e].first];
        ++deg[h.edges[e].second];
    }
    for (int v = 0; v < h.n; ++v) {
        if (deg[v] % 2 != 0) {
            if (v == h.apex) throw FactorError("an even factor selects an even number of stubs");
            throw FactorError("vertex " + std::to_string(v) + " has odd degree in the factor");
        }
    }
    StatsScratch ws;
    return selection_stats(h, sel, deg, ws);
}

}  // namespace detail

inline FactorStats factor_stats(const Graph& g, const EvenFactor& f) {
    if (!f.stub_ids.empty()) throw FactorError("closed graphs have no stubs");
    return detail::stats_of_factor(detail::host_of(g), f, 0);
}

inline FactorStats factor_stats(const Pole& p, const EvenFactor& f) {
    return detail::stats_of_factor(detail::host_of(p), f, p.arity());
}

// Visit every even factor exactly once: visit(const EvenFactor&, const FactorStats&).
template <class Visit>
inline void for_each_even_factor(const Graph& g, Visit&& visit, const SolveOptions& opts = {}) {
    const auto h = detail::host_of(g);
    detail::scan_even_subgraphs(h, opts.max_subsets,
                                [&](const FactorStats& st, int, const std::vector<char>& sel) {
                                    visit(detail::factor_from_selection(h, sel), st);
                                });
}

template <class Visit>
inline void for_each_even_factor(const Pole& p, StubCount want, Visit&& visit,
                                 const SolveOptions& opts = {}) {
    const auto h = detail::host_of(p);
    detail::scan_even_subgraphs(
        h, opts.max_subsets, [&](const FactorStats& st, int mask, const std::vector<char>& sel) {
            const int used = std::popcount(static_cast<unsigned>(mask));
            if (want == StubCount::zero && used != 0) return;
            if (want == StubCount::two && used != 2) return;
            visit(detail::factor_from_selection(h, sel), st);
        });
}

inline std::vector<EvenFactor> enumerate_even_factors(const Graph& g,
                                                      const SolveOptions& opts = {}) {
    std::vector<EvenFactor> out;
    for_each_even_factor(g, [&](const EvenFactor& f, const FactorStats&) { out.push_back(f); },
                         opts);
    return out;
}

inline std::vector<EvenFactor> enumerate_even_factors(const Pole& p, StubCount want,
                                                      const SolveOptions& opts = {}) {
    std::vector<EvenFactor> out;
    for_each_even_factor(
        p, want, [&](const EvenFactor& f, const FactorStats&) { out.push_back(f); }, opts);
    return out;
}

struct MinExcess {
    int excess = 0;
    EvenFactor witness;
};

// Minimum excess over all even factors, with one minimising factor.
// Exhaustive below the subset budget, exact branch-and-bound above it;
// a nonzero bnb_node_limit turns unbounded search into a resource error.
inline MinExcess min_excess(const Graph& g, const SolveOptions& opts = {}) {
    const auto h = detail::host_of(g);
    if (detail::fits_exhaustive(h, opts.max_subsets)) {
        int best = INT_MAX;
        std::vector<char> best_sel;
        detail::scan_even_subgraphs(h, opts.max_subsets,
                                    [&](const FactorStats& st, int, const std::vector<char>& sel) {
                                        if (st.excess < best) {
                                            best = st.excess;
                                            best_sel = sel;
                                        }
                                    });
        return {best, detail::factor_from_selection(h, best_sel)};
    }
    auto r = detail::run_bnb(h, {}, opts.bnb_node_limit);
    return {r->excess, detail::factor_from_selection(h, r->sel)};
}

namespace detail {

struct PoleMinima {
    int q0 = INT_MAX;
    std::array<int, 3> pair_q2 = {INT_MAX, INT_MAX, INT_MAX};  // (0,1), (0,2), (1,2)
};

inline PoleMinima pole_minima(const Pole& p, const SolveOptions& opts) {
    const auto h = host_of(p);
    const int r = p.arity();
    PoleMinima out;
    if (fits_exhaustive(h, opts.max_subsets)) {
        scan_even_subgraphs(h, opts.max_subsets,
                            [&](const FactorStats& st, int mask, const std::vector<char>&) {
                                if (mask == 0) {
                                    out.q0 = std::min(out.q0, st.excess);
                                } else {
                                    int s1 = std::countr_zero(static_cast<unsigned>(mask));
                                    int s2 = 31 - std::countl_zero(static_cast<unsigned>(mask));
                                    out.pair_q2[s1 + s2 - 1] =
                                        std::min(out.pair_q2[s1 + s2 - 1], st.excess);
                                }
                            });
        return out;
    }
    std::vector<std::pair<int, int>> preset;
    auto preset_stubs = [&](int a, int b) {
        preset.clear();
        for (int s = 0; s < r; ++s)
            preset.emplace_back(h.inner_edges + s, (s == a || s == b) ? 1 : 0);
    };
    preset_stubs(-1, -1);
    if (auto res = run_bnb(h, preset, opts.bnb_node_limit)) out.q0 = res->excess;
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b) {
            preset_stubs(a, b);
            if (auto res = run_bnb(h, preset, opts.bnb_node_limit))
                out.pair_q2[a + b - 1] = res->excess;
        }
    return out;
}

}  // namespace detail

// The triple t(P) = (q0, q2, n): minimum excess over factors using no
// stubs, minimum over factors using two stubs (for 3-poles, over all
// three stub pairs), and the vertex count.
inline ExcessTriple pole_triple(const Pole& p, const SolveOptions& opts = {}) {
    const auto m = detail::pole_minima(p, opts);
    int q2 = INT_MAX;
    const int pairs = p.arity() == 2 ? 1 : 3;
    for (int i = 0; i < pairs; ++i) q2 = std::min(q2, m.pair_q2[i]);
    if (m.q0 == INT_MAX || q2 == INT_MAX)
        throw FactorError("pole admits no even factor in the required stub class");
    return {m.q0, q2, p.vertex_count()};
}

// Minimum excess separately for each of the three stub pairs of a 3-pole.
inline std::map<std::pair<int, int>, int> per_pair_q2(const Pole& p,
                                                      const SolveOptions& opts = {}) {
    if (p.arity() != 3) throw ArityError("per_pair_q2 requires a 3-pole");
    const auto m = detail::pole_minima(p, opts);
    std::map<std::pair<int, int>, int> out;
    const std::array<std::pair<int, int>, 3> keys = {{{0, 1}, {0, 2}, {1, 2}}};
    for (int i = 0; i < 3; ++i) {
        if (m.pair_q2[i] == INT_MAX)
            throw FactorError("no even factor uses stub pair (" + std::to_string(keys[i].first) +
                              ", " + std::to_string(keys[i].second) + ")");
        out[keys[i]] = m.pair_q2[i];
    }
    return out;
}

}  // namespace cubictsp
