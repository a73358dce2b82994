#include <doctest.h>

#include <recolour/circular.hpp>
#include <recolour/errors.hpp>
#include <recolour/generators.hpp>
#include <recolour/parameters.hpp>

#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace recolour;

namespace
{
    auto verdict_at(const Graph & g, int k, int q) -> Verdict
    {
        return is_mixing(g, circular_clique(k, q)).verdict;
    }
}

TEST_CASE("lower parent examples")
{
    auto check = [] (int k, int q, int kp, int qp) {
        auto lp = lower_parent(k, q);
        CHECK(lp.parent_k == kp);
        CHECK(lp.parent_q == qp);
    };
    check(5, 2, 2, 1);
    check(7, 2, 3, 1);
    check(7, 3, 2, 1);
    check(19, 7, 8, 3);
    check(5, 1, 4, 1);
    CHECK_THROWS(lower_parent(6, 2));
    CHECK_THROWS(lower_parent(3, 2));
}

TEST_CASE("lower parents up to 200 are the unique solutions")
{
    for (std::int64_t k = 2 ; k <= 200 ; ++k)
        for (std::int64_t q = 1 ; 2 * q <= k ; ++q) {
            if (std::gcd(k, q) != 1)
                continue;
            auto lp = lower_parent(k, q);
            REQUIRE(k * lp.parent_q - lp.parent_k * q == 1);
            REQUIRE(lp.parent_q >= 1);
            REQUIRE(lp.parent_q <= q);
            int solutions = 0;
            for (std::int64_t qp = 1 ; qp <= q ; ++qp)
                if ((k * qp - 1) % q == 0)
                    ++solutions;
            REQUIRE(solutions == 1);
        }
}

TEST_CASE("lower parent bound")
{
    auto a = lower_parent_bound(7, 2, 3, 1);
    CHECK(a.bound.same_pair(Frac{3, 1}));
    CHECK(a.holds);
    CHECK(a.equal_denominators);

    auto b = lower_parent_bound(19, 7, 5, 2);
    CHECK(b.bound.same_pair(Frac{53, 21}));
    CHECK(b.holds);
    CHECK(b.strict);
    CHECK(Frac{8, 3} > Frac{5, 2});

    auto c = lower_parent_bound(5, 2, 2, 1);
    CHECK(c.bound.same_pair(Frac{2, 1}));
    CHECK(c.holds);
    CHECK(c.equal_denominators);

    CHECK_THROWS(lower_parent_bound(5, 2, 5, 2));
    CHECK_THROWS(lower_parent_bound(5, 2, 3, 1));

    std::mt19937_64 rng(53);
    int checked = 0;
    while (checked < 500) {
        std::int64_t q = 1 + static_cast<std::int64_t>(rng() % 30);
        std::int64_t k = 2 * q + static_cast<std::int64_t>(rng() % 60);
        if (std::gcd(k, q) != 1)
            continue;
        std::int64_t p = 1 + static_cast<std::int64_t>(rng() % 20);
        std::int64_t j = 1 + static_cast<std::int64_t>(rng() % 100);
        if (! (Frac{k, q} > Frac{j, p}))
            continue;
        ++checked;
        auto r = lower_parent_bound(k, q, j, p);
        Frac parent{r.parent.parent_k, r.parent.parent_q};
        CHECK(r.holds);
        CHECK(parent >= r.bound);
        if (r.equal_denominators)
            CHECK(parent >= Frac{j, p});
        if (r.strict)
            CHECK(parent > Frac{j, p});
    }
}

TEST_CASE("available colours")
{
    auto path = path_graph(3);
    auto a = available_colours(path, std::vector<int>{0, 0, 4}, 1, 7, 2);
    CHECK(a.colours == std::vector<int>{2});
    CHECK(a.interval);

    Graph lonely(1);
    auto b = available_colours(lonely, std::vector<int>{3}, 0, 5, 2);
    CHECK(b.colours.size() == 5);
    CHECK(b.interval);

    auto c = available_colours(complete_graph(3), std::vector<int>{0, 3, 6}, 0, 9, 2);
    CHECK(c.colours == std::vector<int>{0, 1, 8});
    CHECK(c.interval);

    auto star = star_graph(2);
    auto d = available_colours(star, std::vector<int>{0, 2, 7}, 0, 10, 2);
    CHECK(d.colours == std::vector<int>{0, 4, 5, 9});
    CHECK_FALSE(d.interval);

    CHECK(is_cyclic_interval({}, 5));
    CHECK(is_cyclic_interval({0, 1, 4}, 5));
    CHECK_FALSE(is_cyclic_interval({0, 2}, 5));

    // brute force: available colours are exactly the recolourings plus f(v)
    std::mt19937_64 rng(59);
    for (int trial = 0 ; trial < 60 ; ++trial) {
        auto g = testing::random_graph(2 + trial % 5, 0.5, false, rng);
        int q = 1 + trial % 3, k = 2 * q + 1 + trial % 4;
        auto h = circular_clique(k, q);
        auto f = find_hom(g, h);
        if (! f)
            continue;
        for (int v = 0 ; v < g.size() ; ++v) {
            std::vector<int> expected;
            for (int c = 0 ; c < k ; ++c) {
                auto image = f->image;
                image[v] = c;
                if (is_hom(g, h, image))
                    expected.push_back(c);
            }
            CHECK(available_colours(g, f->image, v, k, q).colours == expected);
        }
    }
}

TEST_CASE("flexibility")
{
    auto f22 = frozen_family(2, 2);
    auto frozen = is_flexible(f22, 7, 2);
    CHECK_FALSE(frozen.flexible);
    REQUIRE(frozen.witness);
    CHECK(is_surjective(*frozen.witness));

    CHECK(is_flexible(complete_graph(3), 9, 2).flexible);
    CHECK(is_flexible(cycle_graph(5), 7, 1).flexible);
    CHECK_THROWS_AS(is_flexible(complete_graph(3), 5, 2), NoColourings);
    CHECK_THROWS(is_flexible(path_graph(2, true), 5, 2));
}

TEST_CASE("moving colourings off colour 0")
{
    auto c4 = cycle_graph(4);
    Hom f{5, {0, 2, 0, 2}};
    auto walk = avoid_colour_normalize(c4, f, 5, 2);
    REQUIRE_FALSE(walk.empty());
    auto h = circular_clique(5, 2);
    Hom previous = f;
    for (auto & step : walk) {
        CHECK(is_hom(c4, h, step));
        CHECK(colour_adjacent(previous, step));
        previous = step;
    }
    CHECK(std::ranges::find(walk.back().image, 0) == walk.back().image.end());

    CHECK(avoid_colour_normalize(c4, Hom{5, {1, 3, 1, 3}}, 5, 2).empty());
    CHECK_THROWS(avoid_colour_normalize(c4, Hom{6, {0, 2, 0, 2}}, 6, 2));
    CHECK_THROWS(avoid_colour_normalize(cycle_graph(5), Hom{5, {0, 2, 4, 1, 3}}, 5, 2));

    std::mt19937_64 rng(61);
    int checked = 0;
    for (int trial = 0 ; trial < 200 && checked < 120 ; ++trial) {
        auto g = testing::random_graph(2 + trial % 5, 0.5, false, rng);
        int q = 1 + trial % 3, k = 2 * q + 1 + static_cast<int>(rng() % 5);
        if (std::gcd(k, q) != 1)
            continue;
        auto target = circular_clique(k, q);
        auto space = enumerate_homs(g, target);
        if (space.empty())
            continue;
        auto start = space.hom(rng() % space.size());
        if (is_surjective(start))
            continue;
        ++checked;
        auto path = avoid_colour_normalize(g, start, k, q);
        Hom last = start;
        for (auto & step : path) {
            CHECK(is_hom(g, target, step));
            CHECK(colour_adjacent(last, step));
            last = step;
        }
        CHECK(std::ranges::find(last.image, 0) == last.image.end());
    }
    CHECK(checked >= 50);
}

TEST_CASE("scale retraction")
{
    auto r = scale_retraction(5, 2, 2);
    CHECK(r.retraction.image[7] == 3);
    CHECK(is_hom(circular_clique(10, 4), circular_clique(5, 2), r.retraction));
    CHECK(is_hom(circular_clique(5, 2), circular_clique(10, 4), r.section));
    for (int u = 0 ; u < 5 ; ++u) {
        CHECK(r.section.image[u] == 2 * u);
        CHECK(r.retraction.image[r.section.image[u]] == u);
    }
    auto one = scale_retraction(7, 3, 1);
    CHECK(one.retraction == identity_hom(circular_clique(7, 3)));

    for (int k = 2 ; k <= 9 ; ++k)
        for (int q = 1 ; 2 * q <= k ; ++q) {
            if (std::gcd(k, q) != 1)
                continue;
            for (int d = 1 ; d <= 3 ; ++d) {
                auto s = scale_retraction(k, q, d);
                CHECK(compose(s.section, s.retraction) == identity_hom(circular_clique(k, q)));
            }
        }
}

TEST_CASE("deleting a vertex dismantles onto a smaller circular clique")
{
    auto first = delete_vertex_dismantle(3, 1, 2, 0);
    CHECK(first.target_k == 3);
    CHECK(first.target_q == 1);
    CHECK(first.residual.size() == 3);
    CHECK(first.steps.size() == 2);
    CHECK(replay(first.start, first.steps) == first.residual);

    int runs = 0;
    for (int k = 2 ; k <= 9 ; ++k)
        for (int q = 1 ; 2 * q <= k ; ++q) {
            if (std::gcd(k, q) != 1)
                continue;
            for (int d = 1 ; d <= 3 ; ++d)
                for (int i = 0 ; i < k * d ; ++i) {
                    if (d == 1) {
                        auto lp = lower_parent(k, q);
                        if (lp.parent_k < 2 * lp.parent_q) {
                            CHECK_THROWS(delete_vertex_dismantle(k, q, d, i));
                            continue;
                        }
                    }
                    auto del = delete_vertex_dismantle(k, q, d, i);
                    ++runs;
                    auto target = circular_clique(del.target_k, del.target_q);
                    REQUIRE(replay(del.start, del.steps) == del.residual);
                    CHECK(del.residual.size() == target.size());
                    CHECK(is_hom(del.residual, target, del.isomorphism));
                    CHECK(del.residual.edge_count() == target.edge_count());
                    CHECK(del.start == circular_clique(k * d, q * d).without_vertex(i));
                    if (d >= 2) {
                        CHECK(del.target_k == k * (d - 1));
                        CHECK(del.residual.size() == k * (d - 1));
                    }
                    // residual vertices keep their adjacency from the original graph
                    auto whole = circular_clique(k * d, q * d);
                    for (int a = 0 ; a < del.residual.size() ; ++a)
                        for (int b = 0 ; b < del.residual.size() ; ++b)
                            CHECK(del.residual.adjacent(a, b)
                                == whole.adjacent(del.residual_vertices[a], del.residual_vertices[b]));
                }
        }
    CHECK(runs > 100);
}

TEST_CASE("scan examples")
{
    auto k3 = mixing_scan(complete_graph(3), {{7, 2}, {4, 1}, {9, 2}});
    REQUIRE(k3.rows.size() == 3);
    CHECK(k3.rows[0].verdict == ScanVerdict::not_mixing);
    CHECK(k3.rows[0].witness.has_value());
    CHECK(k3.rows[1].verdict == ScanVerdict::mixing);
    CHECK(k3.rows[2].verdict == ScanVerdict::mixing);
    bool lower = false, upper = false;
    for (auto & b : k3.bounds) {
        if (b.quantity == "m_c" && b.relation == ">=" && b.value == Frac{4, 1})
            lower = true;
        if (b.quantity == "M_c" && b.relation == "<=" && b.value == Frac{4, 1})
            upper = true;
    }
    CHECK(lower);
    CHECK(upper);

    CHECK(mixing_scan(cycle_graph(4), {{5, 2}}).rows[0].verdict == ScanVerdict::mixing);

    auto c6 = mixing_scan(cycle_graph(6), {{3, 1}, {5, 2}, {7, 2}});
    CHECK(c6.rows[0].verdict == ScanVerdict::not_mixing);
    CHECK(c6.rows[1].verdict == ScanVerdict::mixing);
    CHECK(c6.rows[2].verdict == ScanVerdict::not_mixing);

    auto none = mixing_scan(complete_graph(3), {{5, 2}});
    CHECK(none.rows[0].verdict == ScanVerdict::no_colourings);
    auto skipped = mixing_scan(cycle_graph(8), {{9, 2}}, 100);
    CHECK(skipped.rows[0].verdict == ScanVerdict::skipped);

    // non-reduced fractions are kept as given
    auto scaled = mixing_scan(complete_graph(2), {{10, 4}});
    CHECK(scaled.rows[0].frac.same_pair(Frac{10, 4}));
    CHECK(scaled.rows[0].hom_count == 30);
}

TEST_CASE("flexible colourings have no more classes than at the lower parent")
{
    int compared = 0;
    for (int n = 1 ; n <= 6 ; ++n)
        for (auto & g : testing::graphs_up_to_isomorphism(n, false))
            for (int k = 3 ; k <= 9 ; ++k)
                for (int q = 1 ; 2 * q <= k ; ++q) {
                    if (std::gcd(k, q) != 1)
                        continue;
                    auto lp = lower_parent(k, q);
                    if (lp.parent_k < 2 * lp.parent_q)
                        continue;
                    auto here = is_mixing(g, circular_clique(k, q));
                    if (here.verdict == Verdict::no_colourings)
                        continue;
                    if (! is_flexible(g, k, q).flexible)
                        continue;
                    auto parent = circular_clique(static_cast<int>(lp.parent_k), static_cast<int>(lp.parent_q));
                    auto there = is_mixing(g, parent);
                    CHECK(here.classes <= there.classes);
                    ++compared;
                }
    MESSAGE("pairs compared: " << compared);
}

TEST_CASE("class counts agree at 3/1 and 6/2 under flexibility")
{
    int compared = 0;
    for (int n = 1 ; n <= 6 ; ++n)
        for (auto & g : testing::graphs_up_to_isomorphism(n, false)) {
            if (clique_number(g) >= 3)
                continue;
            if (! hom_exists(g, complete_graph(3)))
                continue;
            if (! is_flexible(g, 3, 1).flexible || ! is_flexible(g, 6, 2).flexible)
                continue;
            auto a = components(g, circular_clique(3, 1), GraphKind::colour);
            auto b = components(g, circular_clique(6, 2), GraphKind::colour);
            CHECK(a.class_count() == b.class_count());
            ++compared;
        }
    MESSAGE("graphs compared: " << compared);
    CHECK(compared > 0);
}

TEST_CASE("twice the colouring number suffices for mixing")
{
    for (int n = 1 ; n <= 5 ; ++n)
        for (auto & g : testing::graphs_up_to_isomorphism(n, false)) {
            int col = colouring_number(g).value;
            for (int k = 2 ; k <= 12 ; ++k)
                for (int q = 1 ; 2 * q <= k ; ++q) {
                    if (std::gcd(k, q) != 1 || Frac{k, q} < Frac{2 * col, 1})
                        continue;
                    CHECK(verdict_at(g, k, q) == Verdict::mixing);
                }
        }
}
