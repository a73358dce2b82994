#include <doctest.h>

#include <recolour/errors.hpp>
#include <recolour/generators.hpp>
#include <recolour/hom.hpp>

#include "oracles.hpp"

#include <random>

using namespace recolour;

namespace
{
    auto space_images(const HomSpace & space) -> std::vector<std::vector<int>>
    {
        std::vector<std::vector<int>> result;
        for (std::size_t i = 0 ; i < space.size() ; ++i)
            result.emplace_back(space[i].begin(), space[i].end());
        return result;
    }
}

TEST_CASE("is_hom examples")
{
    auto k2 = complete_graph(2);
    auto k3 = complete_graph(3);
    CHECK(is_hom(k2, k3, std::vector<int>{0, 1}));
    CHECK_FALSE(is_hom(k2, k3, std::vector<int>{2, 2}));
    CHECK(is_hom(path_graph(3), circular_clique(7, 2), std::vector<int>{0, 2, 4}));
    CHECK_FALSE(is_hom(path_graph(3), circular_clique(7, 2), std::vector<int>{0, 1, 4}));
    CHECK_THROWS_AS(is_hom(k2, k3, std::vector<int>{0}), std::invalid_argument);
    CHECK_THROWS_AS(is_hom(k2, k3, std::vector<int>{0, 3}), std::invalid_argument);

    // a looped source vertex needs a looped image
    auto loop = path_graph(1, true);
    CHECK_FALSE(is_hom(loop, k2, std::vector<int>{0}));
    CHECK(is_hom(loop, path_graph(2, true), std::vector<int>{1}));
}

TEST_CASE("enumeration examples")
{
    auto k2 = complete_graph(2);
    auto k3 = complete_graph(3);
    CHECK(enumerate_homs(k2, k3).size() == 6);
    CHECK(enumerate_homs(k3, k2).size() == 0);
    CHECK(enumerate_homs(k2, circular_clique(5, 2)).size() == 10);
    CHECK(enumerate_homs(Graph(0), k3).size() == 1);
    CHECK(enumerate_homs(Graph(2), k3).size() == 9);
    CHECK(enumerate_homs(cycle_graph(5), k3).size() == 30);
    CHECK(enumerate_homs(k3, k3).size() == 6);
    CHECK(enumerate_homs(k2, Graph(0)).size() == 0);
    CHECK_FALSE(hom_exists(cycle_graph(5), k2));
    CHECK(find_hom(cycle_graph(5), k3).has_value());
}

TEST_CASE("enumeration is sorted, valid and indexable")
{
    auto g = cycle_graph(6);
    auto h = circular_clique(7, 2);
    auto space = enumerate_homs(g, h);
    for (std::size_t i = 0 ; i < space.size() ; ++i) {
        CHECK(is_hom(g, h, space[i]));
        CHECK(space.index_of(space[i]) == i);
        if (i > 0)
            CHECK(space.hom(i - 1) < space.hom(i));
    }
    CHECK_FALSE(space.index_of(std::vector<int>{0, 0, 0, 0, 0, 0}).has_value());
}

TEST_CASE("enumeration agrees with the naive oracle")
{
    std::mt19937_64 rng(101);
    int checked = 0;
    while (checked < 150) {
        int n = 1 + static_cast<int>(rng() % 7);
        int t = 1 + static_cast<int>(rng() % 5);
        auto g = testing::random_graph(n, 0.45, rng() % 3 == 0, rng);
        auto h = testing::random_graph(t, 0.55, rng() % 2 == 0, rng);
        if (testing::naive_assignment_count(g, h) > 1'000'000)
            continue;
        ++checked;
        CHECK(space_images(enumerate_homs(g, h)) == testing::naive_homs(g, h));
    }
}

TEST_CASE("count is multiplicative over components")
{
    std::mt19937_64 rng(7);
    for (int trial = 0 ; trial < 40 ; ++trial) {
        auto a = testing::random_graph(1 + trial % 4, 0.5, false, rng);
        auto b = testing::random_graph(1 + trial % 3, 0.6, false, rng);
        auto h = testing::random_graph(3 + trial % 3, 0.6, trial % 2 == 0, rng);
        auto u = disjoint_union(a, b);
        CHECK(enumerate_homs(u, h).size() == enumerate_homs(a, h).size() * enumerate_homs(b, h).size());
    }
}

TEST_CASE("composition")
{
    auto k2 = complete_graph(2);
    auto k3 = complete_graph(3);
    Hom f{3, {0, 1}};
    Hom rotate{3, {1, 2, 0}};
    CHECK(compose(f, rotate) == Hom{3, {1, 2}});
    CHECK(compose(identity_hom(k2), f) == f);
    CHECK(compose(f, identity_hom(k3)) == f);
    CHECK_THROWS(compose(f, Hom{3, {0, 1}}));
    CHECK(identity_hom(Graph(1)).image == std::vector<int>{0});
    CHECK(identity_hom(cycle_graph(4)).image == std::vector<int>{0, 1, 2, 3});
    CHECK(is_hom(cycle_graph(4), cycle_graph(4), identity_hom(cycle_graph(4))));

    CHECK(is_surjective(identity_hom(cycle_graph(4))));
    CHECK_FALSE(is_surjective(f));
    Hom embed{7, {0, 1, 2, 3, 4, 5, 6}};
    CHECK(is_hom(frozen_family(2, 2), circular_clique(7, 2), embed));
    CHECK(is_surjective(embed));

    SUBCASE("associativity on enumerable triples")
    {
        auto a = path_graph(3);
        auto b = cycle_graph(4);
        auto c = complete_graph(3);
        auto d = circular_clique(7, 2);
        auto ab = enumerate_homs(a, b);
        auto bc = enumerate_homs(b, c);
        auto cd = enumerate_homs(c, d);
        for (std::size_t i = 0 ; i < ab.size() ; i += 3)
            for (std::size_t j = 0 ; j < bc.size() ; j += 2)
                for (std::size_t l = 0 ; l < cd.size() ; l += 5) {
                    auto f = ab.hom(i), g = bc.hom(j), h = cd.hom(l);
                    auto left = compose(f, compose(g, h));
                    CHECK(left == compose(compose(f, g), h));
                    CHECK(is_hom(a, d, left));
                }
    }
}

TEST_CASE("caps")
{
    CHECK_THROWS_AS(enumerate_homs(Graph(8), complete_graph(4), 1000), CapExceeded);
    CHECK(enumerate_homs(Graph(4), complete_graph(4), 256).size() == 256);
    try {
        enumerate_homs(Graph(5), complete_graph(4), 100);
        FAIL("expected CapExceeded");
    }
    catch (const CapExceeded & e) {
        CHECK(e.cap() == 100);
    }

    Graph ten(10);
    auto k3 = complete_graph(3);
    HomSearch search(ten, k3);
    search.set_node_cap(50);
    CHECK_THROWS_AS(search.run([] (std::span<const int>) { return true; }), CapExceeded);
}

TEST_CASE("search pins and restrictions")
{
    auto g = cycle_graph(5);
    auto h = complete_graph(3);
    HomSearch search(g, h);
    search.use_natural_order();
    search.pin(0, 2);
    search.pin(2, 2);
    std::vector<std::vector<int>> seen;
    search.run([&] (std::span<const int> f) {
        seen.emplace_back(f.begin(), f.end());
        return true;
    });
    std::vector<std::vector<int>> expected;
    for (auto & f : testing::naive_homs(g, h))
        if (f[0] == 2 && f[2] == 2)
            expected.push_back(f);
    CHECK(seen == expected);

    HomSearch restricted(g, h);
    Bitset only0(3);
    only0.set(0);
    restricted.restrict(1, only0);
    restricted.restrict(3, only0);
    auto first = restricted.first();
    REQUIRE(first);
    CHECK((*first)[1] == 0);
    CHECK((*first)[3] == 0);
}

TEST_CASE("thread count does not change the enumeration")
{
    auto g = cycle_graph(7);
    auto h = circular_clique(7, 2);
    auto base = space_images(enumerate_homs(g, h));
    int saved = search_threads();
    for (int threads : {2, 3, 5}) {
        set_search_threads(threads);
        CHECK(space_images(enumerate_homs(g, h)) == base);
        CHECK(enumerate_homs(complete_graph(3), complete_graph(2)).size() == 0);
        CHECK_THROWS_AS(enumerate_homs(g, h, 10), CapExceeded);
    }
    set_search_threads(saved);
}
