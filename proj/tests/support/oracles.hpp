#pragma once

#include <recolour/graph.hpp>
#include <recolour/hom_graph.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace recolour::testing
{
    /// Every assignment V(G) -> V(H) tested edge by edge, in lexicographic
    /// order. Only for |V(H)|^|V(G)| small.
    auto naive_homs(const Graph & g, const Graph & h) -> std::vector<std::vector<int>>;

    auto naive_assignment_count(const Graph & g, const Graph & h) -> std::uint64_t;

    /// Component ids (first appearance order) over naive_homs, computed by
    /// testing every pair for adjacency.
    auto naive_partition(const Graph & g, const Graph & h, GraphKind kind) -> std::vector<int>;

    auto naive_class_count(const Graph & g, const Graph & h, GraphKind kind) -> int;

    /// All-pairs shortest paths in the homomorphism graph over naive_homs;
    /// -1 when unreachable.
    auto naive_hom_distances(const Graph & g, const Graph & h) -> std::vector<std::vector<int>>;

    auto random_graph(int n, double p, bool loops, std::mt19937_64 & rng) -> Graph;

    /// Brute force over all permutations.
    auto isomorphic(const Graph & a, const Graph & b) -> bool;

    /// Canonical adjacency string: lexicographically least over relabellings.
    auto canonical_form(const Graph & g) -> std::vector<bool>;

    /// All graphs on exactly n vertices up to isomorphism.
    auto graphs_up_to_isomorphism(int n, bool loops) -> std::vector<Graph>;

    /// All labelled graphs on exactly n vertices.
    auto labelled_graphs(int n, bool loops) -> std::vector<Graph>;
}
