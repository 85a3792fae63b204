#include "doctest.h"

#include <random>
#include <set>

#include "diamond/generators.hpp"
#include "diamond/partial_cube.hpp"
#include "test_util.hpp"

using namespace diamond;

TEST_CASE("dw_related on C6") {
    auto c6 = generate_named("c6");
    auto dm = all_pairs_distances(c6);
    // edge order: 0:(0,1) 1:(1,2) 2:(2,3) 3:(3,4) 4:(4,5) 5:(0,5)
    CHECK(dw_related(c6, 0, 3, dm));   // (0,1) ~ (3,4): 3+2 == 2+3
    CHECK(!dw_related(c6, 0, 1, dm));  // (0,1) vs (1,2): 1+2 != 0+1
    for (int e = 0; e < 6; ++e) CHECK(dw_related(c6, e, e, dm));
}

TEST_CASE("dw_related is reflexive and symmetric on random bipartite graphs") {
    std::mt19937 rng(31337);
    for (int iter = 0; iter < 40; ++iter) {
        int n = std::uniform_int_distribution<int>(2, 10)(rng);
        auto g = testutil::random_connected_bipartite(n, n / 2, rng);
        auto dm = all_pairs_distances(g);
        for (int e = 0; e < g.edge_count(); ++e) {
            CHECK(dw_related(g, e, e, dm));
            for (int f = 0; f < g.edge_count(); ++f)
                CHECK(dw_related(g, e, f, dm) == dw_related(g, f, e, dm));
        }
    }
}

TEST_CASE("implemented relation agrees with Winkler's form on bipartite graphs") {
    std::mt19937 rng(424242);
    for (int iter = 0; iter < 40; ++iter) {
        int n = std::uniform_int_distribution<int>(2, 10)(rng);
        auto g = testutil::random_connected_bipartite(n, n / 2, rng);
        auto dm = all_pairs_distances(g);
        for (int e = 0; e < g.edge_count(); ++e)
            for (int f = 0; f < g.edge_count(); ++f) {
                if (e == f) continue;
                CHECK(dw_related(g, e, f, dm) == testutil::winkler_related(g, e, f, dm));
            }
    }
}

TEST_CASE("compute_dw_classes fixtures") {
    auto desargues = generate_named("desargues");
    auto classes = compute_dw_classes(desargues, all_pairs_distances(desargues));
    REQUIRE(classes.size() == 5);
    for (const auto& c : classes) {
        CHECK(c.edges.size() == 6);
        CHECK(c.components == 2);
        CHECK(c.semicube_a().size() == 10);
        CHECK(c.semicube_b().size() == 10);
    }

    auto c6 = generate_named("c6");
    auto c6cls = compute_dw_classes(c6, all_pairs_distances(c6));
    REQUIRE(c6cls.size() == 3);
    CHECK(c6cls[0].edges == std::vector<int>{0, 3});
    CHECK(c6cls[1].edges == std::vector<int>{1, 4});
    CHECK(c6cls[2].edges == std::vector<int>{2, 5});

    auto k2 = generate_named("p_2");
    auto k2cls = compute_dw_classes(k2, all_pairs_distances(k2));
    REQUIRE(k2cls.size() == 1);
    CHECK(k2cls[0].edges == std::vector<int>{0});
    CHECK(k2cls[0].semicube_a() == std::vector<int>{0});
    CHECK(k2cls[0].semicube_b() == std::vector<int>{1});
}

TEST_CASE("C6 classes match brute-force pairwise relation") {
    auto c6 = generate_named("c6");
    auto dm = all_pairs_distances(c6);
    std::vector<std::vector<int>> expected;
    std::set<int> taken;
    for (int e = 0; e < 6; ++e) {
        if (taken.count(e)) continue;
        std::vector<int> cls{e};
        taken.insert(e);
        for (int f = e + 1; f < 6; ++f)
            if (dw_related(c6, e, f, dm)) {
                cls.push_back(f);
                taken.insert(f);
            }
        expected.push_back(cls);
    }
    auto classes = compute_dw_classes(c6, dm);
    REQUIRE(classes.size() == expected.size());
    for (std::size_t i = 0; i < classes.size(); ++i)
        CHECK(classes[i].edges == expected[i]);
}

TEST_CASE("class partition and semicube complementarity") {
    std::mt19937 rng(5150);
    for (int iter = 0; iter < 40; ++iter) {
        int n = std::uniform_int_distribution<int>(2, 10)(rng);
        auto g = testutil::random_connected_bipartite(n, n / 3, rng);
        auto classes = compute_dw_classes(g, all_pairs_distances(g));
        std::vector<int> owner(g.edge_count(), -1);
        for (const auto& c : classes) {
            int a = 0, b = 0;
            for (int v = 0; v < g.n; ++v) (c.side[v] == 0 ? a : b)++;
            CHECK(a + b == g.n);
            CHECK(a >= 1);
            for (int e : c.edges) {
                CHECK(owner[e] == -1);
                owner[e] = c.id;
            }
        }
        for (int e = 0; e < g.edge_count(); ++e) CHECK(owner[e] != -1);
    }
}

TEST_CASE("classes equal brute-force closure classes; verdict matches transitivity") {
    // The pairwise relation's closure classes must equal the component
    // classes, and the partial-cube verdict must equal "bipartite and the
    // relation is transitive" on small graphs.
    testutil::enumerate_connected(4, [](const Graph& g) {
        auto colored = two_color(g);
        auto verdict = is_partial_cube(g);
        if (!colored.bipartite) {
            CHECK(!verdict.is_partial_cube);
            return;
        }
        auto dm = all_pairs_distances(g);
        auto expected = testutil::closure_classes(g, dm);
        auto classes = compute_dw_classes(g, dm);
        REQUIRE(classes.size() == expected.size());
        for (std::size_t i = 0; i < classes.size(); ++i)
            CHECK(classes[i].edges == expected[i]);
        CHECK(verdict.is_partial_cube == testutil::relation_transitive(g, dm));
    });
    std::mt19937 rng(777);
    for (int iter = 0; iter < 30; ++iter) {
        int n = std::uniform_int_distribution<int>(2, 8)(rng);
        auto g = testutil::random_connected_bipartite(n, 2, rng);
        if (g.edge_count() > 12) continue;
        auto dm = all_pairs_distances(g);
        auto expected = testutil::closure_classes(g, dm);
        auto classes = compute_dw_classes(g, dm);
        REQUIRE(classes.size() == expected.size());
        for (std::size_t i = 0; i < classes.size(); ++i)
            CHECK(classes[i].edges == expected[i]);
        CHECK(is_partial_cube(g).is_partial_cube == testutil::relation_transitive(g, dm));
    }
}

TEST_CASE("is_partial_cube fixtures") {
    auto c6 = generate_named("c6");
    auto v6 = is_partial_cube(c6);
    REQUIRE(v6.is_partial_cube);
    CHECK(v6.labeling.bits_per_vertex == 3);

    auto c4 = generate_named("c4");
    auto v4 = is_partial_cube(c4);
    REQUIRE(v4.is_partial_cube);
    CHECK(v4.labeling.bits_per_vertex == 2);

    auto k23 = generate_named("k23");
    auto vk = is_partial_cube(k23);
    REQUIRE(!vk.is_partial_cube);
    CHECK(vk.certificate.reason == Certificate::Reason::not_partial_cube);
    REQUIRE(vk.certificate.witness.size() == 2);
    {
        int u = vk.certificate.witness[0], w = vk.certificate.witness[1];
        auto dm = all_pairs_distances(k23);
        auto lab = hypercube_label(k23, vk.classes, 0);
        CHECK(lab.hamming(u, w) != dm(u, w));
    }

    auto c3 = generate_named("cycle_3");
    auto v3 = is_partial_cube(c3);
    REQUIRE(!v3.is_partial_cube);
    CHECK(v3.certificate.reason == Certificate::Reason::odd_cycle);

    auto single = Graph::from_edges(1, {});
    CHECK(is_partial_cube(single).is_partial_cube);

    CHECK_THROWS_AS(is_partial_cube(Graph{}), std::invalid_argument);
    CHECK_THROWS_AS(is_partial_cube(Graph::from_edges(2, {})), std::invalid_argument);
}

TEST_CASE("accepted labelings are isometric") {
    std::mt19937 rng(2718);
    for (int iter = 0; iter < 30; ++iter) {
        int n = std::uniform_int_distribution<int>(1, 12)(rng);
        auto tree = testutil::random_tree(n, rng);
        auto verdict = is_partial_cube(tree);  // every tree is a partial cube
        REQUIRE(verdict.is_partial_cube);
        auto dm = all_pairs_distances(tree);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                CHECK(verdict.labeling.hamming(u, v) == dm(u, v));
    }
}

TEST_CASE("hypercube_label") {
    auto k2 = generate_named("p_2");
    auto classes = compute_dw_classes(k2, all_pairs_distances(k2));
    auto lab = hypercube_label(k2, classes, 0);
    CHECK(lab.bits[0] == std::vector<std::uint8_t>{0});
    CHECK(lab.bits[1] == std::vector<std::uint8_t>{1});

    auto c6 = generate_named("c6");
    auto c6cls = compute_dw_classes(c6, all_pairs_distances(c6));
    auto c6lab = hypercube_label(c6, c6cls, 0);
    CHECK(c6lab.bits[0] == std::vector<std::uint8_t>{0, 0, 0});
    CHECK(c6lab.bits[3] == std::vector<std::uint8_t>{1, 1, 1});

    // base vertex is always all-zero
    for (int base = 0; base < 6; ++base) {
        auto l = hypercube_label(c6, c6cls, base);
        CHECK(l.bits[base] == std::vector<std::uint8_t>{0, 0, 0});
    }
}
