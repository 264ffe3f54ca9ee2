#pragma once

// Simple undirected graphs on dense vertex ids 0..n-1, stored as a sorted
// edge list plus adjacency lists. Instances are immutable after
// construction, so every query is safe to call from multiple threads.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "cubictsp/error.hpp"

namespace cubictsp {

using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) {
    if (u > v) std::swap(u, v);
    return {u, v};
}

class Graph {
public:
    Graph() = default;

    Graph(int vertex_count, std::vector<Edge> edges)
        : n_(vertex_count), edges_(std::move(edges)) {
        if (n_ < 0) throw StructuralError("negative vertex count");
        for (auto& [u, v] : edges_) {
            if (u > v) std::swap(u, v);
            if (u < 0 || v >= n_)
                throw StructuralError("edge endpoint out of range: " + std::to_string(u) + " " +
                                      std::to_string(v) + " with " + std::to_string(n_) +
                                      " vertices");
            if (u == v) throw StructuralError("loop at vertex " + std::to_string(u));
        }
        std::sort(edges_.begin(), edges_.end());
        auto dup = std::adjacent_find(edges_.begin(), edges_.end());
        if (dup != edges_.end())
            throw StructuralError("parallel edge {" + std::to_string(dup->first) + ", " +
                                  std::to_string(dup->second) + "}");
        adj_.assign(n_, {});
        for (const auto& [u, v] : edges_) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool has_edge(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
        return std::binary_search(edges_.begin(), edges_.end(), make_edge(u, v));
    }

    // Index of e in the sorted edge list, or -1 when absent.
    int edge_index(Edge e) const {
        e = make_edge(e.first, e.second);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || *it != e) return -1;
        return static_cast<int>(it - edges_.begin());
    }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

// True iff every vertex has degree exactly 3. No simple cubic graph has
// fewer than 4 vertices, so smaller inputs (including the empty graph)
// are rejected outright.
inline bool validate_cubic(const Graph& g) {
    if (g.vertex_count() < 4) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 3) return false;
    return true;
}

inline bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

}  // namespace cubictsp
