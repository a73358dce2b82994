#pragma once

#include <recolour/graph.hpp>
#include <recolour/hom.hpp>

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace recolour
{
    /// Text format: `c <comment>`, `p <n>`, `e <u> <v>` (0-based, `e v v` is a
    /// loop). Exactly one `p` line, before any `e`. Duplicate edges are
    /// rejected. Throws GraphFormatError.
    auto read_graph(std::istream & in) -> Graph;
    auto parse_graph(std::string_view text) -> Graph;
    auto read_graph_file(const std::string & path) -> Graph;

    void write_graph(std::ostream & out, const Graph & g);
    auto format_graph(const Graph & g) -> std::string;

    /// "c0,c1,...,c{n-1}".
    auto format_hom(const Hom & f) -> std::string;
    auto format_image(std::span<const int> image) -> std::string;

    /// Parses a comma separated colour list; an empty string is the empty map.
    auto parse_image(std::string_view text) -> std::vector<int>;
    auto parse_hom(std::string_view text, int target_n) -> Hom;
}
