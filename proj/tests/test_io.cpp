#include <doctest.h>

#include <recolour/errors.hpp>
#include <recolour/frac.hpp>
#include <recolour/generators.hpp>
#include <recolour/graph_io.hpp>

#include "oracles.hpp"

#include <random>
#include <sstream>

using namespace recolour;

TEST_CASE("graph text round trip")
{
    std::mt19937_64 rng(5);
    for (int trial = 0 ; trial < 60 ; ++trial) {
        auto g = testing::random_graph(1 + trial % 10, 0.4, trial % 2 == 1, rng);
        auto text = format_graph(g);
        CHECK(parse_graph(text) == g);
        CHECK(format_graph(parse_graph(text)) == text);
    }

    auto c5 = cycle_graph(5);
    std::stringstream out;
    write_graph(out, c5);
    CHECK(read_graph(out) == c5);
}

TEST_CASE("graph text format")
{
    auto g = parse_graph("c triangle with a loop\np 3\ne 0 1\ne 1 2\ne 0 2\ne 2 2\n");
    CHECK(g.size() == 3);
    CHECK(g.edge_count() == 4);
    CHECK(g.has_loop(2));
    CHECK(format_graph(complete_graph(2)).find("p 2\ne 0 1\n") != std::string::npos);

    CHECK(parse_graph("p 0\n").size() == 0);
    CHECK(parse_graph("\np 2\n\ne 1 0\n").adjacent(0, 1));
}

TEST_CASE("graph format errors carry a line number")
{
    auto line_of = [] (const std::string & text) {
        try {
            parse_graph(text);
        }
        catch (const GraphFormatError & e) {
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("e 0 1\np 2\n") == 1);
    CHECK(line_of("p 2\np 2\n") == 2);
    CHECK(line_of("p 2\ne 0 2\n") == 2);
    CHECK(line_of("p 2\ne 0 1\ne 1 0\n") == 3);
    CHECK(line_of("p 3\nx 0 1\n") == 2);
    CHECK(line_of("p 3\ne 0\n") == 2);
    CHECK(line_of("p -1\n") == 1);
    CHECK(line_of("c nothing\n") >= 0);
    CHECK(line_of("p 2\ne 0 1 7\n") == 2);
}

TEST_CASE("hom text")
{
    Hom f{5, {0, 2, 4, 1, 3}};
    CHECK(format_hom(f) == "0,2,4,1,3");
    CHECK(parse_hom("0,2,4,1,3", 5) == f);
    CHECK(parse_image("").empty());
    CHECK(parse_image(" 1, 2 ,3") == std::vector<int>{1, 2, 3});
    CHECK_THROWS(parse_hom("0,5", 5));
    CHECK_THROWS(parse_image("0,,1"));
    CHECK_THROWS(parse_image("a"));
}

TEST_CASE("fractions")
{
    CHECK(Frac{10, 4}.reduced().same_pair(Frac{5, 2}));
    CHECK_FALSE(Frac{10, 4}.is_reduced());
    CHECK(Frac{10, 4} == Frac{5, 2});
    CHECK(Frac{7, 3} < Frac{5, 2});
    CHECK(parse_frac("7/3").same_pair(Frac{7, 3}));
    CHECK(parse_frac("4").same_pair(Frac{4, 1}));
    CHECK(Frac{7, 3}.to_string() == "7/3");
    CHECK_THROWS(parse_frac("3/0"));
    CHECK_THROWS(parse_frac("x/2"));
    CHECK(ceil_div(7, 3) == 3);
    CHECK(ceil_div(6, 3) == 2);
}
