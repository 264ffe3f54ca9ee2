#pragma once

// Random connected simple cubic graphs via the pairing (configuration)
// model: three points per vertex, a uniform perfect matching of the
// points, and rejection of samples with loops, parallel edges, or more
// than one component.

#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cubictsp/error.hpp"
#include "cubictsp/graph.hpp"

namespace cubictsp {

// One pairing attempt; empty when the matched multigraph is not simple.
inline std::optional<Graph> pairing_model_sample(int n, std::mt19937& rng) {
    if (n < 4 || n % 2 != 0)
        throw DomainError("cubic graphs need an even vertex count of at least 4");
    std::vector<int> points(3 * n);
    std::iota(points.begin(), points.end(), 0);
    std::shuffle(points.begin(), points.end(), rng);
    std::vector<Edge> edges;
    edges.reserve(3 * n / 2);
    for (std::size_t i = 0; i < points.size(); i += 2) {
        int u = points[i] / 3, v = points[i + 1] / 3;
        if (u == v) return std::nullopt;
        edges.push_back(make_edge(u, v));
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) return std::nullopt;
    return Graph(n, std::move(edges));
}

inline Graph random_connected_cubic(int n, std::mt19937& rng, int max_attempts = 100000) {
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        auto g = pairing_model_sample(n, rng);
        if (g && is_connected(*g)) return *g;
    }
    throw Error("pairing model failed to produce a connected simple cubic graph on " +
                std::to_string(n) + " vertices after " + std::to_string(max_attempts) +
                " attempts");
}

}  // namespace cubictsp
