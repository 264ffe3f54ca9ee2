#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cubictsp/constructions.hpp"
#include "cubictsp/predicates.hpp"
#include "cubictsp/random_cubic.hpp"
#include "cubictsp/tsp.hpp"
#include "oracles.hpp"

using namespace cubictsp;

TEST_CASE("tour_from_even_factor on K4") {
    Graph k4 = seed_graph(SeedName::k4);
    EvenFactor ham{{k4.edge_index({0, 1}), k4.edge_index({1, 2}), k4.edge_index({2, 3}),
                    k4.edge_index({0, 3})},
                   {}};
    Tour t = tour_from_even_factor(k4, ham);
    CHECK(t.length == 4);
    validate_tour(k4, t);

    Tour doubled = tour_from_even_factor(k4, EvenFactor{});
    CHECK(doubled.length == 6);  // 4 - 2 + 4, a doubled spanning tree
    validate_tour(k4, doubled);

    CHECK_THROWS_AS(tour_from_even_factor(k4, EvenFactor{{0}, {}}), FactorError);
}

TEST_CASE("tour_from_even_factor on the Petersen 2-factor") {
    Graph pet = seed_graph(SeedName::petersen);
    // outer 5-cycle plus inner pentagram: the classic 2-factor
    std::vector<int> ids;
    for (int i = 0; i < 5; ++i) {
        ids.push_back(pet.edge_index(make_edge(i, (i + 1) % 5)));
        ids.push_back(pet.edge_index(make_edge(5 + i, 5 + (i + 2) % 5)));
    }
    std::sort(ids.begin(), ids.end());
    Tour t = tour_from_even_factor(pet, EvenFactor{ids, {}});
    CHECK(t.length == 12);  // 10 - 2 + 2*2 + 0
    validate_tour(pet, t);
}

TEST_CASE("every factor's tour is an upper bound, tight at the optimum") {
    for (const Graph& g : {seed_graph(SeedName::k4), seed_graph(SeedName::k33),
                           oracles::generalized_petersen(3, 1),
                           oracles::generalized_petersen(4, 1), seed_graph(SeedName::petersen)}) {
        TspResult best = tsp_length(g);
        bool tight = false;
        for_each_even_factor(g, [&](const EvenFactor& f, const FactorStats& st) {
            Tour t = tour_from_even_factor(g, f);
            validate_tour(g, t);
            CHECK(t.length == g.vertex_count() - 2 + st.excess);
            CHECK(t.length >= best.length);
            if (t.length == best.length) tight = true;
        });
        CHECK(tight);
    }
}

TEST_CASE("tsp_length on known graphs") {
    CHECK(tsp_length(seed_graph(SeedName::k4)).length == 4);
    CHECK(tsp_length(seed_graph(SeedName::k33)).length == 6);
    CHECK(tsp_length(seed_graph(SeedName::petersen)).length == 11);
    CHECK_THROWS_AS(tsp_length(Graph(8, {{0, 1}})), StructuralError);
    // two disjoint K4 blocks: cubic but disconnected
    std::vector<Edge> disc;
    for (int b = 0; b < 2; ++b)
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v) disc.push_back({4 * b + u, 4 * b + v});
    CHECK_THROWS_AS(tsp_length(Graph(8, disc)), NoTourError);
}

TEST_CASE("result invariants tie length, tour and factor together") {
    std::mt19937 rng(3);
    for (int i = 0; i < 8; ++i) {
        Graph g = random_connected_cubic(8 + 2 * (i % 4), rng);
        TspResult r = tsp_length(g);
        validate_tour(g, r.witness_tour);
        CHECK(r.witness_tour.length == r.length);
        CHECK(r.length ==
              g.vertex_count() - 2 + factor_stats(g, r.witness_factor).excess);
    }
}

TEST_CASE("held_karp matches permutation brute force on tiny graphs") {
    for (const Graph& g : {seed_graph(SeedName::k4), seed_graph(SeedName::k33),
                           oracles::generalized_petersen(3, 1),
                           oracles::generalized_petersen(4, 1), seed_graph(SeedName::petersen)}) {
        CAPTURE(g.vertex_count());
        CHECK(held_karp_tsp(g) == oracles::brute_permutation_tsp(g));
    }
    CHECK(held_karp_tsp(seed_graph(SeedName::petersen)) == 11);
    CHECK_THROWS_AS(held_karp_tsp(seed_graph(SeedName::petersen), 8), ResourceBoundError);
}

TEST_CASE("solver equals oracle on the fixed corpus") {
    std::vector<Graph> corpus = {seed_graph(SeedName::k4),
                                 seed_graph(SeedName::k33),
                                 seed_graph(SeedName::petersen),
                                 oracles::generalized_petersen(3, 1),
                                 oracles::generalized_petersen(4, 1),
                                 oracles::generalized_petersen(8, 3),
                                 oracles::bridge_cubic(),
                                 family({FamilyKind::planar_k4, 0}).closed,
                                 family({FamilyKind::planar_k4, 1}).closed,
                                 family({FamilyKind::bipartite_k33, 0}).closed};
    for (const auto& g : corpus) {
        CAPTURE(g.vertex_count());
        CHECK(tsp_length(g).length == held_karp_tsp(g));
    }
}

TEST_CASE("solver equals oracle on random cubic graphs") {
    std::mt19937 rng(2025);
    for (int i = 0; i < 25; ++i) {
        int n = 8 + 2 * (i % 4);
        Graph g = random_connected_cubic(n, rng);
        CAPTURE(n, i);
        CHECK(tsp_length(g).length == held_karp_tsp(g));
    }
}

TEST_CASE("family lower bounds") {
    CHECK(family_lower_bound({FamilyKind::planar_k4, 0}) == 8);
    CHECK(family_lower_bound({FamilyKind::planar_k4, 1}) == 18);
    CHECK(family_lower_bound({FamilyKind::bipartite_k33, 0}) == 12);
    CHECK(family_lower_bound({FamilyKind::threeconn_petersen, 1}) == 11);
    CHECK_THROWS_AS(family_lower_bound({FamilyKind::threeconn_petersen, 0}), DomainError);

    // bounds are tight where exhaustive solving is affordable
    CHECK(tsp_length(family({FamilyKind::planar_k4, 1}).closed).length == 18);
    CHECK(tsp_length(family({FamilyKind::bipartite_k33, 0}).closed).length == 12);
    CHECK(tsp_length(family({FamilyKind::threeconn_petersen, 1}).closed).length == 11);
    CHECK(tsp_length(family({FamilyKind::planar_k4, 2}).closed).length ==
          family_lower_bound({FamilyKind::planar_k4, 2}));
}

TEST_CASE("closed walks in bipartite graphs are even") {
    // cross-module consistency: any odd closed walk the tour machinery
    // produces certifies an odd circuit, so bipartiteness must fail
    std::mt19937 rng(14);
    std::vector<Graph> corpus = {seed_graph(SeedName::k4), seed_graph(SeedName::k33),
                                 oracles::generalized_petersen(4, 1),
                                 oracles::generalized_petersen(8, 3)};
    for (int i = 0; i < 6; ++i) corpus.push_back(random_connected_cubic(10, rng));
    for (const auto& g : corpus) {
        bool odd_walk_seen = false;
        for_each_even_factor(g, [&](const EvenFactor& f, const FactorStats&) {
            if (tour_from_even_factor(g, f).length % 2 != 0) odd_walk_seen = true;
        });
        if (odd_walk_seen) CHECK_FALSE(is_bipartite(g));
        if (is_bipartite(g)) CHECK_FALSE(odd_walk_seen);
    }
}

TEST_CASE("hamiltonicity is exactly excess two") {
    std::mt19937 rng(99);
    for (int i = 0; i < 10; ++i) {
        Graph g = random_connected_cubic(10, rng);
        bool hamiltonian = held_karp_tsp(g) == g.vertex_count();
        CHECK((min_excess(g).excess == 2) == hamiltonian);
        CHECK(min_excess(g).excess >= 2);
    }
}
