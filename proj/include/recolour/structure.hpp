#pragma once

#include <recolour/graph.hpp>
#include <recolour/hom.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace recolour
{
    inline constexpr std::uint64_t default_node_cap = 1'000'000;

    /// Folding v into u deletes v; allowed when N(v) ⊆ N(u), loops included.
    struct FoldStep
    {
        int removed = -1;
        int absorber = -1;

        /// Old label to label in the folded graph, -1 for the removed vertex.
        std::vector<int> relabel;
    };

    auto is_fold(const Graph & g, int v, int u) -> bool;

    /// Every (v, u) admitting a fold, in lexicographic order.
    auto all_folds(const Graph & g) -> std::vector<std::pair<int, int>>;

    /// The lexicographically least fold, or nullopt when g is stiff.
    auto find_fold(const Graph & g) -> std::optional<FoldStep>;

    /// Throws std::invalid_argument if (v, u) is not a fold.
    auto apply_fold(const Graph & g, int v, int u) -> std::pair<Graph, FoldStep>;

    struct StiffReduction
    {
        std::vector<FoldStep> steps;
        Graph terminal;

        /// Labels in the input of the terminal's vertices, terminal order.
        std::vector<int> terminal_vertices;

        /// The composite of the folds, input -> terminal.
        Hom retraction;

        /// Filled in by is_dismantlable.
        std::optional<bool> terminal_is_rigid;
    };

    /// Greedy: always applies the least fold.
    auto stiff_reduction(const Graph & g) -> StiffReduction;

    /// Picks uniformly among the available folds at every step.
    auto stiff_reduction(const Graph & g, std::mt19937_64 & rng) -> StiffReduction;

    /// Re-applies the steps, checking each is a fold. Throws on a bad step.
    auto replay(const Graph & g, const std::vector<FoldStep> & steps) -> Graph;

    /// Some endomorphism other than the identity, if one exists.
    auto non_identity_endomorphism(const Graph & g, std::uint64_t node_cap = default_node_cap) -> std::optional<Hom>;
    auto is_rigid(const Graph & g, std::uint64_t node_cap = default_node_cap) -> bool;

    struct Dismantlability
    {
        bool dismantlable = false;
        StiffReduction reduction;

        /// When not dismantlable: a non-identity endomorphism of the terminal.
        std::optional<Hom> witness;
    };

    auto is_dismantlable(const Graph & g, std::uint64_t node_cap = default_node_cap) -> Dismantlability;

    /// r: X -> Y and section: Y -> X are homomorphisms with r(section(y)) = y.
    auto is_retraction(const Graph & x, const Graph & y, const Hom & r, const Hom & section) -> bool;

    /// A bijective homomorphism a -> b with the same edge count, if any.
    auto find_isomorphism(const Graph & a, const Graph & b) -> std::optional<Hom>;

    struct CoreResult
    {
        Graph core;

        /// Labels in the input of the core's vertices.
        std::vector<int> vertices;

        /// Retraction input -> core (core labels); fixes the core pointwise.
        Hom retraction;
    };

    auto core_of(const Graph & g, std::uint64_t node_cap = default_node_cap) -> CoreResult;

    /// Whether core_of-style search finds no endomorphism into a proper
    /// induced subgraph.
    auto is_core(const Graph & g, std::uint64_t node_cap = default_node_cap) -> bool;

    struct SelfMixing
    {
        bool value = false;

        /// "dismantlable+components" when both computations ran and agreed,
        /// otherwise the single method used.
        std::string provenance;
    };

    /// Loop-free G: dismantlability, cross-checked against the colour graph
    /// of G-colourings. Looped G: connectivity of the homomorphism graph,
    /// cross-checked against dismantlability. A disagreement throws
    /// std::logic_error.
    auto self_mixing(const Graph & g, std::uint64_t cap = default_hom_cap) -> SelfMixing;
}
