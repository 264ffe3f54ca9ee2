#pragma once

// Seed graphs, pole builders, the two recursive gadget compositions, the
// closure operations, and the three graph families with their closed-form
// size predictions.
//
// Fixed labelings, so all outputs are reproducible byte for byte:
//   K4        vertices 0..3, all six pairs.
//   K3,3      parts {0,2,4} and {1,3,5} (even/odd), all nine cross pairs.
//   Petersen  outer 5-cycle 0..4, spokes i -- i+5, inner pentagram
//             {5+i, 5+((i+2) mod 5)}.

#include <cstdint>
#include <string>
#include <vector>

#include "cubictsp/error.hpp"
#include "cubictsp/graph.hpp"
#include "cubictsp/pole.hpp"

namespace cubictsp {

enum class SeedName { k4, k33, petersen };

inline Graph seed_graph(SeedName name) {
    std::vector<Edge> edges;
    switch (name) {
        case SeedName::k4:
            for (int u = 0; u < 4; ++u)
                for (int v = u + 1; v < 4; ++v) edges.emplace_back(u, v);
            return Graph(4, std::move(edges));
        case SeedName::k33:
            for (int u = 0; u < 6; u += 2)
                for (int v = 1; v < 6; v += 2) edges.push_back(make_edge(u, v));
            return Graph(6, std::move(edges));
        case SeedName::petersen:
            for (int i = 0; i < 5; ++i) {
                edges.push_back(make_edge(i, (i + 1) % 5));
                edges.emplace_back(i, i + 5);
                edges.push_back(make_edge(5 + i, 5 + (i + 2) % 5));
            }
            return Graph(10, std::move(edges));
    }
    throw DomainError("unknown seed graph");
}

// Cut an edge of a cubic graph into a pair of dangling edges. Stubs are
// ordered (lower endpoint, higher endpoint).
inline Pole cut_edge_to_2pole(const Graph& g, Edge e) {
    if (!validate_cubic(g)) throw StructuralError("cut_edge_to_2pole requires a cubic graph");
    e = make_edge(e.first, e.second);
    if (!g.has_edge(e.first, e.second))
        throw StructuralError("edge {" + std::to_string(e.first) + ", " +
                              std::to_string(e.second) + "} not in graph");
    std::vector<Edge> edges;
    edges.reserve(g.edge_count() - 1);
    for (const auto& f : g.edges())
        if (f != e) edges.push_back(f);
    return Pole(Graph(g.vertex_count(), std::move(edges)), {e.first, e.second});
}

// Remove a vertex and turn its three incident edges into dangling edges.
// Stubs are attached at the former neighbors, in ascending order; the
// surviving vertices are relabeled densely (w > v becomes w - 1).
inline Pole remove_vertex_to_3pole(const Graph& g, int v) {
    if (!validate_cubic(g)) throw StructuralError("remove_vertex_to_3pole requires a cubic graph");
    if (v < 0 || v >= g.vertex_count())
        throw StructuralError("vertex " + std::to_string(v) + " out of range");
    auto relabel = [v](int w) { return w > v ? w - 1 : w; };
    std::vector<Edge> edges;
    for (const auto& [a, b] : g.edges())
        if (a != v && b != v) edges.push_back(make_edge(relabel(a), relabel(b)));
    std::vector<int> stubs;
    for (int w : g.neighbors(v)) stubs.push_back(relabel(w));
    return Pole(Graph(g.vertex_count() - 1, std::move(edges)), std::move(stubs));
}

// The doubling composition: two copies of the 2-pole a, the first stub of
// each copy joined to a new vertex x1, the second stub of each to a new
// vertex x2, plus a path x1 y1 y2 x2; the dangling edges of the result
// hang off y1 and y2. Copy 1 keeps the original ids, copy 2 occupies the
// next block, then x1, x2, y1, y2.
inline Pole prime(const Pole& a) {
    if (a.arity() != 2) throw ArityError("prime requires a 2-pole");
    const int n = a.vertex_count();
    const int x1 = 2 * n, x2 = 2 * n + 1, y1 = 2 * n + 2, y2 = 2 * n + 3;
    std::vector<Edge> edges;
    edges.reserve(2 * a.inner().edge_count() + 7);
    for (const auto& [u, v] : a.inner().edges()) {
        edges.emplace_back(u, v);
        edges.emplace_back(u + n, v + n);
    }
    edges.push_back(make_edge(a.stubs()[0], x1));
    edges.push_back(make_edge(a.stubs()[0] + n, x1));
    edges.push_back(make_edge(a.stubs()[1], x2));
    edges.push_back(make_edge(a.stubs()[1] + n, x2));
    edges.push_back(make_edge(x1, y1));
    edges.push_back(make_edge(y1, y2));
    edges.push_back(make_edge(y2, x2));
    return Pole(Graph(2 * n + 4, std::move(edges)), {y1, y2});
}

// The Petersen composition: remove vertex 0 of the Petersen graph and
// replace each of the nine remaining vertices by a copy of the symmetric
// 3-pole b. At each position, the copy's stubs are assigned to the
// position's connection points in ascending order of the Petersen
// neighbor they lead to (the removed vertex counting as neighbor 0, so
// its former neighbors 1, 4, 5 export the dangling edges of the result).
// The copy at position p occupies the id block [(p-1)*n, p*n).
inline Pole double_prime(const Pole& b) {
    if (b.arity() != 3) throw ArityError("double_prime requires a 3-pole");
    const Graph petersen = seed_graph(SeedName::petersen);
    const int n = b.vertex_count();

    // attach(p, q): vertex of the copy at position p whose stub leads
    // toward Petersen neighbor q.
    auto attach = [&](int p, int q) {
        const auto& ports = petersen.neighbors(p);
        int idx = static_cast<int>(std::lower_bound(ports.begin(), ports.end(), q) -
                                   ports.begin());
        return (p - 1) * n + b.stubs()[idx];
    };

    std::vector<Edge> edges;
    for (int p = 1; p < 10; ++p) {
        const int base = (p - 1) * n;
        for (const auto& [u, v] : b.inner().edges()) edges.emplace_back(base + u, base + v);
    }
    for (const auto& [p, q] : petersen.edges())
        if (p != 0 && q != 0) edges.push_back(make_edge(attach(p, q), attach(q, p)));

    std::vector<int> stubs;
    for (int p : petersen.neighbors(0)) stubs.push_back(attach(p, 0));
    return Pole(Graph(9 * n, std::move(edges)), std::move(stubs));
}

// Splice a 2-pole into an edge {u, v} of a cubic host: the edge is
// removed and u, v are joined to the pole's first and second stub.
inline Graph insert_2pole(const Graph& host, Edge e, const Pole& p) {
    if (!validate_cubic(host)) throw StructuralError("insert_2pole requires a cubic host");
    if (p.arity() != 2) throw ArityError("insert_2pole requires a 2-pole");
    e = make_edge(e.first, e.second);
    if (!host.has_edge(e.first, e.second))
        throw StructuralError("edge {" + std::to_string(e.first) + ", " +
                              std::to_string(e.second) + "} not in host");
    const int base = host.vertex_count();
    std::vector<Edge> edges;
    for (const auto& f : host.edges())
        if (f != e) edges.push_back(f);
    for (const auto& [u, v] : p.inner().edges()) edges.emplace_back(base + u, base + v);
    edges.push_back(make_edge(e.first, base + p.stubs()[0]));
    edges.push_back(make_edge(e.second, base + p.stubs()[1]));
    Graph result(base + p.vertex_count(), std::move(edges));
    if (!validate_cubic(result)) throw StructuralError("insert_2pole produced a non-cubic graph");
    return result;
}

// Close a 3-pole by attaching one new vertex to its three dangling edges.
inline Graph close_3pole_with_vertex(const Pole& p) {
    if (p.arity() != 3) throw ArityError("close_3pole_with_vertex requires a 3-pole");
    const auto& s = p.stubs();
    if (s[0] == s[1] || s[0] == s[2] || s[1] == s[2])
        throw StructuralError("stub vertices coincide; closing would create a multigraph");
    const int v = p.vertex_count();
    std::vector<Edge> edges = p.inner().edges();
    for (int w : s) edges.emplace_back(w, v);
    Graph result(v + 1, std::move(edges));
    if (!validate_cubic(result))
        throw StructuralError("close_3pole_with_vertex produced a non-cubic graph");
    return result;
}

enum class FamilyKind { planar_k4, bipartite_k33, threeconn_petersen };

struct FamilyId {
    FamilyKind kind;
    int k = 0;
};

struct ClosedForm {
    std::int64_t excess_param = 0;  // a_k or b_k
    std::int64_t pole_vertices = 0; // n_k
    bool operator==(const ClosedForm&) const = default;
};

// Closed forms of the recurrences:
//   planar     a_k = 2*2^k - 2,   n_k = 8*2^k - 4
//   bipartite  a_k = 2*2^k - 2,   n_k = 10*2^k - 4
//   threeconn  b_k = (9^k - 1)/8, n_k = 9^k
inline ClosedForm closed_form(FamilyKind kind, int k) {
    if (k < 0) throw DomainError("family index k must be nonnegative");
    if (kind == FamilyKind::threeconn_petersen) {
        if (k > 18) throw DomainError("9^k overflows 64-bit arithmetic for k > 18");
        std::int64_t pow9 = 1;
        for (int i = 0; i < k; ++i) pow9 *= 9;
        return {(pow9 - 1) / 8, pow9};
    }
    if (k > 55) throw DomainError("2^k overflows 64-bit arithmetic for k > 55");
    const std::int64_t pow2 = std::int64_t{1} << k;
    if (kind == FamilyKind::planar_k4) return {2 * pow2 - 2, 8 * pow2 - 4};
    return {2 * pow2 - 2, 10 * pow2 - 4};
}

// The pole A_k (planar or bipartite chain) or B_k (Petersen chain).
inline Pole family_pole(FamilyKind kind, int k,
                        std::int64_t max_pole_vertices = 2'000'000) {
    ClosedForm predicted = closed_form(kind, k);
    if (predicted.pole_vertices > max_pole_vertices)
        throw ResourceBoundError("pole for k=" + std::to_string(k) + " has " +
                                 std::to_string(predicted.pole_vertices) +
                                 " vertices, above the limit of " +
                                 std::to_string(max_pole_vertices));
    if (kind == FamilyKind::threeconn_petersen) {
        Pole b(Graph(1, {}), {0, 0, 0});
        for (int i = 0; i < k; ++i) b = double_prime(b);
        return b;
    }
    SeedName seed = (kind == FamilyKind::planar_k4) ? SeedName::k4 : SeedName::k33;
    Pole a = cut_edge_to_2pole(seed_graph(seed), {0, 1});
    for (int i = 0; i < k; ++i) a = prime(a);
    return a;
}

struct Family {
    Pole pole;
    Graph closed;
    ClosedForm predicted;
};

// Builds the k-th pole of the family, closes it per the family's rule
// (insertion into edge {0,1} of the seed host, or attachment of one new
// vertex), and returns the closed-form prediction alongside. The Petersen
// family needs k >= 1: closing the single-vertex pole would require
// parallel edges.
inline Family family(FamilyId id, std::int64_t max_pole_vertices = 2'000'000) {
    Pole pole = family_pole(id.kind, id.k, max_pole_vertices);
    ClosedForm predicted = closed_form(id.kind, id.k);
    Graph closed;
    if (id.kind == FamilyKind::threeconn_petersen) {
        closed = close_3pole_with_vertex(pole);
    } else {
        SeedName seed = (id.kind == FamilyKind::planar_k4) ? SeedName::k4 : SeedName::k33;
        closed = insert_2pole(seed_graph(seed), {0, 1}, pole);
    }
    return {std::move(pole), std::move(closed), predicted};
}

}  // namespace cubictsp
