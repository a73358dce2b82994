#pragma once

#include <recolour/graph.hpp>
#include <recolour/hom.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace recolour
{
    /// Colour graph: homs differing at exactly one vertex are adjacent.
    /// Homomorphism graph: f ~ g when f(u)g(v) is an edge of H for every
    /// edge uv of G, read in both directions.
    enum class GraphKind
    {
        colour,
        homomorphism
    };

    auto to_string(GraphKind kind) -> std::string;

    auto colour_adjacent(const Hom & f, const Hom & g) -> bool;
    auto hom_adjacent(const Graph & g, const Graph & h, std::span<const int> f1, std::span<const int> f2) -> bool;
    auto hom_adjacent(const Graph & g, const Graph & h, const Hom & f1, const Hom & f2) -> bool;

    /// Colours v may take while every other vertex keeps its colour under f:
    /// the common neighbourhood in H of f(N(v)), restricted to looped colours
    /// when v has a loop. Includes f(v) itself.
    auto recolour_options(const Graph & g, const Graph & h, std::span<const int> f, int v) -> Bitset;

    /// Calls visit(v, c) for every colour-graph neighbour of f, in increasing
    /// (vertex, colour) order.
    void for_each_recolouring(const Graph & g, const Graph & h, std::span<const int> f,
            const std::function<void (int, int)> & visit);

    auto recolour_neighbours(const Graph & g, const Graph & h, const Hom & f) -> std::vector<Hom>;

    /// Every g with f ~ g in the homomorphism graph, f itself included, in
    /// lexicographic order.
    void for_each_hom_neighbour(const Graph & g, const Graph & h, std::span<const int> f,
            const std::function<void (std::span<const int>)> & visit);

    struct ComponentClass
    {
        Hom rep;
        std::size_t size = 0;
        bool non_surjective = false;
        bool frozen = false;
    };

    /// Partition of HOM(G, H) into components. Classes are listed in order of
    /// their lexicographically least member, which is the representative.
    struct ComponentReport
    {
        GraphKind kind = GraphKind::colour;
        std::size_t total = 0;
        std::vector<ComponentClass> classes;
        std::vector<int> class_of;
        HomSpace space;

        auto class_count() const -> std::size_t { return classes.size(); }
    };

    auto components(const Graph & g, const Graph & h, GraphKind kind, std::uint64_t cap = default_hom_cap) -> ComponentReport;
    auto components(const Graph & g, const Graph & h, GraphKind kind, HomSpace space) -> ComponentReport;

    enum class Verdict
    {
        mixing,
        not_mixing,
        no_colourings
    };

    auto to_string(Verdict verdict) -> std::string;

    struct MixingResult
    {
        Verdict verdict = Verdict::no_colourings;

        /// Representatives of two different classes when not mixing.
        std::optional<std::pair<Hom, Hom>> witness;
        std::uint64_t total = 0;
        std::uint64_t classes = 0;
    };

    /// Works one connected component of G at a time: the colour graph of a
    /// disjoint union is the Cartesian product of the parts' colour graphs.
    auto is_mixing(const Graph & g, const Graph & h, std::uint64_t cap = default_hom_cap) -> MixingResult;

    /// Whether f has no colour-graph neighbour. Loop-free sources only.
    auto is_frozen(const Graph & g, const Graph & h, const Hom & f) -> bool;

    /// Isolated in the homomorphism graph; valid for any source.
    auto is_hom_isolated(const Graph & g, const Graph & h, std::span<const int> f) -> bool;

    /// Shortest path length in the homomorphism graph, or nullopt if f and g
    /// lie in different components.
    auto homotopy_distance(const Graph & g, const Graph & h, const Hom & from, const Hom & to,
            std::uint64_t cap = default_hom_cap) -> std::optional<int>;

    /// A shortest walk from `from` to `to` in the homomorphism graph, both
    /// ends included, or nullopt if there is none.
    auto homotopy_path(const Graph & g, const Graph & h, const Hom & from, const Hom & to,
            std::uint64_t cap = default_hom_cap) -> std::optional<std::vector<Hom>>;

    struct RadiusCentre
    {
        int radius = 0;
        Hom centre;
    };

    /// Radius of the homomorphism graph and the lexicographically least centre,
    /// or nullopt when it is disconnected. Throws NoColourings on an empty
    /// HOM(G, H).
    auto radius_centre(const Graph & g, const Graph & h, std::uint64_t cap = default_hom_cap) -> std::optional<RadiusCentre>;
}
