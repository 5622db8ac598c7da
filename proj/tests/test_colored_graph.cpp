#include <doctest.h>

#include <random>
#include <stdexcept>

#include "ramsey/colored_graph.hpp"
#include "test_helpers.hpp"

using namespace ramsey;
using namespace test_helpers;

TEST_SUITE_BEGIN("colored_graph");

TEST_CASE("neighborhood of all-blue K4") {
    auto g = all_one_color(4, 1);
    auto blue = neighborhood_subgraph(g, 0, 1);
    CHECK(blue.order() == 3);
    CHECK(blue.edge_count(1) == 3); // blue K3
    auto red = neighborhood_subgraph(g, 0, 2);
    CHECK(red.edge_count(1) == 0);
    CHECK(red.edge_count(2) == 0);
}

TEST_CASE("neighborhood of the C5 coloring") {
    auto g = c5_coloring();
    // colour-1 neighbours of 0 are {1,4}; the edge {1,4} has difference 3 -> colour 2
    auto sub = neighborhood_subgraph(g, 0, 1);
    CHECK(sub.order() == 2);
    CHECK(sub.color_of(0, 1) == 2);
}

TEST_CASE("neighborhood sizes partition n-1") {
    std::mt19937 rng(3);
    for (int rep = 0; rep < 20; ++rep) {
        auto g = random_total(9, 3, rng);
        for (int v = 0; v < g.order(); ++v) {
            int sum = 0;
            for (int t = 1; t <= g.colors(); ++t) sum += g.degree(t, v);
            CHECK(sum == g.order() - 1);
        }
    }
}

TEST_CASE("degree histogram") {
    auto k5 = all_one_color(5, 1);
    auto h = degree_histogram(k5, 1);
    CHECK(h.counts[4] == 5);
    CHECK(h.counts[0] == 0);

    auto c5 = c5_coloring();
    auto h1 = degree_histogram(c5, 1);
    CHECK(h1.counts[2] == 5);

    auto paley = realize_circulant(paley17_coloring());
    auto hp = degree_histogram(paley, 1);
    CHECK(hp.counts[8] == 17);
}

TEST_CASE("statistics reject partial graphs") {
    ColoredCompleteGraph g(4, 2);
    g.set_color(0, 1, 1);
    CHECK(!g.is_total());
    CHECK_THROWS_AS(degree_histogram(g, 1), std::invalid_argument);
    CHECK_THROWS_AS(mono_triangle_count(g), std::invalid_argument);
}

TEST_CASE("monochromatic triangle counts") {
    CHECK(mono_triangle_count(all_one_color(6, 2)) == 20); // C(6,3)
    CHECK(mono_triangle_count(c5_coloring()) == 0);
}

TEST_CASE("Paley-17 has 136 monochromatic triangles") {
    auto g = realize_circulant(paley17_coloring());
    // brute-force triple scan as the oracle
    long long oracle = 0;
    for (int a = 0; a < 17; ++a)
        for (int b = a + 1; b < 17; ++b)
            for (int c = b + 1; c < 17; ++c)
                if (g.color_of(a, b) == g.color_of(b, c) && g.color_of(b, c) == g.color_of(a, c))
                    ++oracle;
    CHECK(oracle == 136);
    CHECK(mono_triangle_count(g) == oracle);
}

TEST_CASE("triangle count against triple scan on random colorings") {
    std::mt19937 rng(5);
    for (int rep = 0; rep < 30; ++rep) {
        int n = 4 + rep % 8;
        auto g = random_total(n, 2, rng);
        long long oracle = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c)
                    if (g.color_of(a, b) == g.color_of(b, c) &&
                        g.color_of(b, c) == g.color_of(a, c))
                        ++oracle;
        CHECK(mono_triangle_count(g) == oracle);
    }
}

TEST_CASE("symmetry survives arbitrary recoloring sequences") {
    std::mt19937 rng(11);
    ColoredCompleteGraph g(10, 3);
    std::uniform_int_distribution<int> vx(0, 9), color(0, 3);
    for (int step = 0; step < 500; ++step) {
        int u = vx(rng), v = vx(rng);
        if (u == v) continue;
        g.set_color(u, v, color(rng));
        CHECK(g.color_of(u, v) == g.color_of(v, u));
        for (int t = 1; t <= 3; ++t) {
            CHECK(g.neighbors(t, u).test(v) == (g.color_of(u, v) == t));
            CHECK(g.neighbors(t, v).test(u) == (g.color_of(u, v) == t));
            CHECK(!g.neighbors(t, u).test(u));
        }
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(ColoredCompleteGraph(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(ColoredCompleteGraph(600, 2), std::invalid_argument);
    CHECK_THROWS_AS(ColoredCompleteGraph(5, 1), std::invalid_argument);
    ColoredCompleteGraph g(5, 2);
    CHECK_THROWS_AS(g.set_color(0, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.set_color(0, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(neighborhood_subgraph(g, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(neighborhood_subgraph(g, 9, 1), std::invalid_argument);
}

TEST_SUITE_END();
