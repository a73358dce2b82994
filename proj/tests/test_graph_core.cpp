#include <doctest.h>

#include <recolour/generators.hpp>
#include <recolour/parameters.hpp>

#include "oracles.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace recolour;

TEST_CASE("complete graphs")
{
    CHECK(complete_graph(1).size() == 1);
    CHECK(complete_graph(1).edge_count() == 0);
    CHECK(complete_graph(3).edge_count() == 3);
    CHECK(complete_graph(4).edge_count() == 6);
    CHECK_THROWS(complete_graph(0));
}

TEST_CASE("cycles and paths")
{
    auto c4 = cycle_graph(4);
    CHECK(c4.edge_count() == 4);
    CHECK(c4.adjacent(3, 0));
    CHECK_FALSE(c4.adjacent(0, 2));
    CHECK(cycle_graph(5).edge_count() == 5);

    auto reflexive_triangle = cycle_graph(3, true);
    CHECK(reflexive_triangle.edge_count() == 6);
    for (int v = 0 ; v < 3 ; ++v)
        CHECK(reflexive_triangle.has_loop(v));
    CHECK_THROWS(cycle_graph(2));

    CHECK(path_graph(2) == complete_graph(2));
    auto i3 = path_graph(3, true);
    CHECK(i3.edge_count() == 5);
    CHECK(i3.has_loop(1));
    auto one = path_graph(1, true);
    CHECK(one.size() == 1);
    CHECK(one.has_loop(0));
    CHECK_THROWS(path_graph(0));
}

TEST_CASE("circular cliques")
{
    auto g52 = circular_clique(5, 2);
    std::set<std::pair<int, int>> expected{{0, 2}, {2, 4}, {1, 4}, {1, 3}, {0, 3}};
    auto edges = g52.edges();
    CHECK(std::set<std::pair<int, int>>(edges.begin(), edges.end()) == expected);

    CHECK(circular_clique(4, 1) == complete_graph(4));

    auto g63 = circular_clique(6, 3);
    CHECK(g63.edge_count() == 3);
    CHECK(g63.adjacent(0, 3));
    CHECK(g63.adjacent(1, 4));
    CHECK(g63.adjacent(2, 5));
    CHECK_THROWS(circular_clique(5, 3));

    SUBCASE("rotation is an automorphism")
    {
        for (int k = 2 ; k <= 14 ; ++k)
            for (int q = 1 ; 2 * q <= k ; ++q) {
                auto g = circular_clique(k, q);
                for (int i = 0 ; i < k ; ++i)
                    for (int j = 0 ; j < k ; ++j)
                        REQUIRE(g.adjacent(i, j) == g.adjacent((i + 1) % k, (j + 1) % k));
            }
    }
}

TEST_CASE("frozen family")
{
    auto f22 = frozen_family(2, 2);
    CHECK(f22.size() == 7);
    for (int i = 0 ; i < 7 ; ++i) {
        auto n = f22.neighbours(i);
        std::vector<int> expected{(i + 2) % 7, (i + 5) % 7};
        std::sort(expected.begin(), expected.end());
        CHECK(n == expected);
    }

    auto f32 = frozen_family(3, 2);
    CHECK(f32.size() == 10);
    CHECK(degrees(f32).max == 3);
    CHECK(degrees(f32).min == 3);
    CHECK(f32.adjacent(0, 2));
    CHECK(f32.adjacent(0, 5));
    CHECK(f32.adjacent(0, 8));

    for (int d = 2 ; d <= 5 ; ++d)
        for (int q = 2 ; q <= 4 ; ++q) {
            auto f = frozen_family(d, q);
            int k = (2 * q - 1) * d + 1;
            auto g = circular_clique(k, q);
            CHECK(degrees(f).max == d);
            CHECK(degrees(f).min == d);
            for (auto [u, v] : f.edges()) {
                int diff = std::abs(u - v);
                CHECK(q <= diff);
                CHECK(diff <= k - q);
                CHECK(g.adjacent(u, v));
            }
        }
    CHECK_THROWS(frozen_family(1, 2));
}

TEST_CASE("products")
{
    auto k2 = complete_graph(2);
    auto kk = categorical_product(k2, k2);
    CHECK(kk.edge_count() == 2);
    CHECK(kk.adjacent(0, 3));
    CHECK(kk.adjacent(1, 2));

    auto one = path_graph(1, true);
    auto c5 = cycle_graph(5);
    CHECK(categorical_product(c5, one) == c5);
    CHECK(categorical_product(k2, Graph(1)).edge_count() == 0);

    auto ext = extension_product(k2, path_graph(2));
    CHECK(ext.edge_count() == 4);
    CHECK(degrees(ext).max == 2);
    CHECK(degrees(ext).min == 2);
    CHECK(extension_product(c5, path_graph(1)) == c5);

    std::mt19937_64 rng(11);
    for (int trial = 0 ; trial < 40 ; ++trial) {
        auto g = testing::random_graph(1 + trial % 5, 0.5, trial % 3 == 0, rng);
        auto f = testing::random_graph(1 + trial % 4, 0.5, trial % 2 == 0, rng);
        auto x = extension_product(g, f);
        CHECK(x == categorical_product(g, f.with_all_loops()));

        // projection onto the first coordinate is a homomorphism
        for (auto [a, b] : x.edges())
            CHECK(g.adjacent(a / f.size(), b / f.size()));
    }
}

TEST_CASE("colouring number")
{
    CHECK(colouring_number(complete_graph(4)).value == 4);
    CHECK(colouring_number(cycle_graph(5)).value == 3);
    CHECK(colouring_number(path_graph(6)).value == 2);
    CHECK(colouring_number(star_graph(4)).value == 2);

    std::mt19937_64 rng(3);
    for (int trial = 0 ; trial < 100 ; ++trial) {
        auto g = testing::random_graph(2 + trial % 9, 0.4, false, rng);
        auto col = colouring_number(g);
        CHECK(col.value >= clique_number(g));

        std::vector<int> pos(static_cast<std::size_t>(g.size()));
        for (int i = 0 ; i < g.size() ; ++i)
            pos[col.order[i]] = i;
        for (int i = 0 ; i < g.size() ; ++i) {
            int back = 0;
            for (int u : g.neighbours(col.order[i]))
                if (pos[u] < i)
                    ++back;
            CHECK(back <= col.value - 1);
        }
    }
}

TEST_CASE("clique, degree and chromatic parameters")
{
    CHECK(clique_number(complete_graph(4)) == 4);
    CHECK(clique_number(cycle_graph(5)) == 2);
    CHECK(clique_number(circular_clique(6, 2)) == 3);
    CHECK_THROWS(clique_number(path_graph(2, true)));

    auto c5 = degrees(cycle_graph(5));
    CHECK(c5.max == 2);
    CHECK(c5.min == 2);
    auto star = degrees(star_graph(3));
    CHECK(star.max == 3);
    CHECK(star.min == 1);
    CHECK(degrees(path_graph(1, true)).max == 1);

    CHECK(chromatic_number(cycle_graph(5)) == 3);
    CHECK(chromatic_number(circular_clique(5, 2)) == 3);
    CHECK(chromatic_number(complete_graph(4)) == 4);
    CHECK_THROWS(chromatic_number(path_graph(2, true)));

    CHECK(circular_chromatic_number(cycle_graph(5), 5).same_pair(Frac{5, 2}));
    CHECK(circular_chromatic_number(complete_graph(3), 3).same_pair(Frac{3, 1}));
    CHECK(circular_chromatic_number(cycle_graph(4), 4).same_pair(Frac{2, 1}));
    CHECK(circular_chromatic_number(cycle_graph(7), 7).same_pair(Frac{7, 3}));
    CHECK(circular_chromatic_number(circular_clique(7, 2), 7).same_pair(Frac{7, 2}));
}

TEST_CASE("graph basics")
{
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 2);
    CHECK(g.has_loop(2));
    CHECK(g.degree(2) == 1);
    CHECK(g.edge_count() == 2);
    CHECK(g.components() == std::vector<std::vector<int>>{{0, 1}, {2}, {3}});
    CHECK_THROWS_AS(g.add_edge(0, 4), std::out_of_range);

    auto h = g.without_vertex(0);
    CHECK(h.size() == 3);
    CHECK(h.has_loop(1));

    int cap = Graph::vertex_cap();
    Graph::set_vertex_cap(8);
    CHECK_THROWS(Graph(9));
    Graph::set_vertex_cap(cap);
    CHECK(Graph(9).size() == 9);
}
