#pragma once

#include <recolour/frac.hpp>
#include <recolour/graph.hpp>

#include <cstdint>
#include <vector>

namespace recolour
{
    struct ColouringNumber
    {
        int value = 0;

        /// v_1..v_n such that each v_i has at most value - 1 neighbours among
        /// v_1..v_{i-1}.
        std::vector<int> order;
    };

    /// Degeneracy plus one, by repeated removal of a minimum degree vertex
    /// (smallest label on ties). Loops are ignored.
    auto colouring_number(const Graph & g) -> ColouringNumber;

    /// Exact clique number of a loop-free graph. Throws CapExceeded after
    /// node_cap search nodes.
    auto clique_number(const Graph & g, std::uint64_t node_cap = 100'000'000) -> int;

    /// A maximum clique, vertices in increasing order.
    auto maximum_clique(const Graph & g, std::uint64_t node_cap = 100'000'000) -> std::vector<int>;

    struct Degrees
    {
        int max = 0;
        int min = 0;
        std::vector<int> per_vertex;
    };

    /// A loop counts once towards its vertex's degree.
    auto degrees(const Graph & g) -> Degrees;

    auto is_bipartite(const Graph & g) -> bool;

    /// Smallest r with G -> K_r. Loop-free input only.
    auto chromatic_number(const Graph & g) -> int;

    /// Least reduced k/q with q <= max_q and G -> G_{k,q}. Exact once
    /// max_q >= |V(G)|. Graphs without edges report 2/1, the smallest
    /// circular clique. Loop-free input only.
    auto circular_chromatic_number(const Graph & g, int max_q) -> Frac;
}
