#include <catch2/catch_amalgamated.hpp>

#include "cubictsp/constructions.hpp"
#include "cubictsp/verify.hpp"
#include "oracles.hpp"

using namespace cubictsp;

TEST_CASE("lemma 1 holds along both 2-pole chains") {
    struct Case {
        FamilyKind kind;
        int k;
        ExcessTriple expected;
    };
    const Case cases[] = {
        {FamilyKind::planar_k4, 0, {4, 2, 12}},
        {FamilyKind::planar_k4, 1, {8, 6, 28}},
        {FamilyKind::bipartite_k33, 0, {4, 2, 16}},
        {FamilyKind::bipartite_k33, 1, {8, 6, 36}},
    };
    for (const auto& c : cases) {
        LemmaReport rep = verify_lemma1(family_pole(c.kind, c.k));
        CAPTURE(c.k);
        CHECK(rep.verdict == Verdict::pass);
        CHECK(rep.expected == c.expected);
        REQUIRE(rep.computed.has_value());
        CHECK(*rep.computed == c.expected);
        CHECK_FALSE(rep.pole_symmetric.has_value());
    }
}

TEST_CASE("lemma 1 rejects poles outside its premise") {
    // Cutting edge {2,3} of the 16-vertex planar closure gives a 2-pole
    // with triple (5, 2, 16): not of the shape (x+2, x, n).
    Graph host = family({FamilyKind::planar_k4, 1}).closed;
    Pole off_shape = cut_edge_to_2pole(host, {2, 3});
    CHECK(pole_triple(off_shape) == ExcessTriple{5, 2, 16});
    CHECK_THROWS_AS(verify_lemma1(off_shape), PremiseError);
    CHECK_THROWS_AS(verify_lemma1(remove_vertex_to_3pole(seed_graph(SeedName::k4), 0)),
                    ArityError);
}

TEST_CASE("lemma 1 reports unverified when the conclusion is out of budget") {
    SolveOptions opts;
    opts.max_subsets = 64;  // enough for the premise A_0, not for A_1
    opts.bnb_node_limit = 16;
    LemmaReport rep = verify_lemma1(family_pole(FamilyKind::planar_k4, 0), opts);
    CHECK(rep.verdict == Verdict::unverified);
    CHECK_FALSE(rep.computed.has_value());
    CHECK(rep.expected == ExcessTriple{4, 2, 12});
}

TEST_CASE("lemma 2 holds for the single-vertex pole") {
    Pole b0(Graph(1, {}), {0, 0, 0});
    LemmaReport rep = verify_lemma2(b0);
    CHECK(rep.verdict == Verdict::pass);
    CHECK(rep.premise == ExcessTriple{1, 0, 1});
    CHECK(rep.expected == ExcessTriple{2, 1, 9});
    REQUIRE(rep.computed.has_value());
    CHECK(*rep.computed == ExcessTriple{2, 1, 9});
    REQUIRE(rep.pole_symmetric.has_value());
    CHECK(*rep.pole_symmetric == Tristate::yes);
}

TEST_CASE("lemma 2 on B_1 is pass or unverified, never silent") {
    SolveOptions opts;
    opts.bnb_node_limit = 500000;
    Pole b1 = family_pole(FamilyKind::threeconn_petersen, 1);
    LemmaReport rep = verify_lemma2(b1, opts);
    CHECK(rep.premise == ExcessTriple{2, 1, 9});
    CHECK(rep.expected == ExcessTriple{11, 10, 81});
    CHECK(*rep.pole_symmetric == Tristate::yes);
    CHECK(rep.verdict != Verdict::fail);
    if (rep.verdict == Verdict::pass) {
        CHECK(*rep.computed == ExcessTriple{11, 10, 81});
    } else {
        CHECK(rep.verdict == Verdict::unverified);
        CHECK_FALSE(rep.computed.has_value());
    }
}

TEST_CASE("lemma 2 rejects premise-violating poles and flags asymmetry") {
    // prism minus a vertex has triple (2, 0, 5): not of shape (y+1, y, n)
    Pole p = remove_vertex_to_3pole(oracles::generalized_petersen(3, 1), 0);
    CHECK(pole_triple(p) == ExcessTriple{2, 0, 5});
    CHECK_THROWS_AS(verify_lemma2(p), PremiseError);
    CHECK_THROWS_AS(verify_lemma2(cut_edge_to_2pole(seed_graph(SeedName::k4), {0, 1})),
                    ArityError);
}

TEST_CASE("closed forms check out to k = 10") {
    CHECK(verify_closed_forms(FamilyKind::planar_k4, 10));
    CHECK(verify_closed_forms(FamilyKind::bipartite_k33, 10));
    CHECK(verify_closed_forms(FamilyKind::threeconn_petersen, 10));
    CHECK_THROWS_AS(verify_closed_forms(FamilyKind::planar_k4, -1), DomainError);
    // spot values
    CHECK(closed_form(FamilyKind::planar_k4, 3) == ClosedForm{14, 60});
    CHECK(closed_form(FamilyKind::bipartite_k33, 2).pole_vertices == 36);
    CHECK(closed_form(FamilyKind::threeconn_petersen, 2) == ClosedForm{10, 81});
    CHECK(closed_form(FamilyKind::threeconn_petersen, 6).pole_vertices == 531441);
}

TEST_CASE("theorem tables carry exact values, bounds and ratios") {
    auto planar = theorem_table(FamilyKind::planar_k4, 3);
    REQUIRE(planar.size() == 4);
    CHECK(planar[0].exact_tsp == 8);
    CHECK(planar[0].ratio_num == 8);
    CHECK(planar[0].ratio_den == 8);
    CHECK(planar[1].exact_tsp == 18);
    CHECK(planar[1].ratio_num == 18);
    CHECK(planar[1].ratio_den == 16);
    CHECK(planar[2].exact_tsp == 38);
    CHECK_FALSE(planar[3].exact_tsp.has_value());
    CHECK(planar[3].ratio_num == planar[3].proved_lower_bound);

    auto three = theorem_table(FamilyKind::threeconn_petersen, 2);
    REQUIRE(three.size() == 2);
    CHECK(three[0].k == 1);
    CHECK(three[0].exact_tsp == 11);
    CHECK(three[0].ratio_num == 11);
    CHECK(three[0].ratio_den == 10);
    CHECK_FALSE(three[1].exact_tsp.has_value());

    auto bip = theorem_table(FamilyKind::bipartite_k33, 1);
    CHECK(bip[0].exact_tsp == 12);
    CHECK(bip[1].exact_tsp == 24);
}

TEST_CASE("table rows satisfy the tightness identity where exact") {
    for (FamilyKind kind : {FamilyKind::planar_k4, FamilyKind::bipartite_k33,
                            FamilyKind::threeconn_petersen}) {
        for (const auto& row : theorem_table(kind, 2)) {
            if (!row.exact_tsp) continue;
            CHECK(*row.exact_tsp == row.closed_vertices - 2 + row.excess_param + 2);
            CHECK(*row.exact_tsp == row.proved_lower_bound);
        }
    }
}

TEST_CASE("ratios increase with k and stay below the family limits") {
    struct Limit {
        FamilyKind kind;
        int k_max;
        double limit;
    };
    for (const auto& [kind, k_max, limit] : {Limit{FamilyKind::planar_k4, 6, 1.25},
                                             Limit{FamilyKind::bipartite_k33, 6, 1.2},
                                             Limit{FamilyKind::threeconn_petersen, 5, 1.125}}) {
        auto rows = theorem_table(kind, k_max);
        double prev = 0.0;
        for (const auto& row : rows) {
            double ratio = static_cast<double>(row.ratio_num) / static_cast<double>(row.ratio_den);
            CAPTURE(row.k, ratio);
            CHECK(ratio > prev);
            CHECK(ratio < limit);
            prev = ratio;
        }
    }
}
