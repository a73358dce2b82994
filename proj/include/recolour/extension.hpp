#pragma once

#include <recolour/frac.hpp>
#include <recolour/graph.hpp>
#include <recolour/hom.hpp>
#include <recolour/hom_graph.hpp>
#include <recolour/structure.hpp>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace recolour
{
    struct Pin
    {
        int vertex = 0;
        int colour = 0;

        friend auto operator==(const Pin &, const Pin &) -> bool = default;
    };

    struct PrecolouringInstance
    {
        Graph host;
        Graph target;
        std::vector<Pin> pins;

        /// Optional disjoint vertex groups X_1..X_t.
        std::vector<std::vector<int>> groups;
    };

    /// Throws std::invalid_argument unless pins are in range, not
    /// contradictory, and form a homomorphism on the pinned subgraph, and the
    /// groups are disjoint.
    void validate_pins(const PrecolouringInstance & instance);

    /// Lexicographically least extension, or nullopt when none exists. A
    /// non-zero node_cap bounds the search (CapExceeded).
    auto extend(const PrecolouringInstance & instance, std::uint64_t node_cap = 0) -> std::optional<Hom>;

    struct LayeredCheck
    {
        bool extends = false;
        std::optional<int> distance;
        std::optional<Hom> extension;
    };

    /// Pins f on layer 0 and g on layer n - 1 of G ⋈ P_n, where (a, i) is
    /// vertex a * n + i, and solves the extension problem. Also computes the
    /// homotopy distance of f and g; the answers must agree with
    /// "extends iff distance < n", otherwise std::logic_error.
    auto layered_extension_check(const Graph & g, const Graph & h, const Hom & f, const Hom & g_end, int n,
            std::uint64_t cap = default_hom_cap) -> LayeredCheck;

    /// Pairwise d_X(X_i, X_j); nullopt means unreachable (infinite).
    auto group_distances(const Graph & x, const std::vector<std::vector<int>> & groups)
        -> std::vector<std::vector<std::optional<int>>>;

    struct CoreExtBound
    {
        CoreResult core;
        int radius = 0;
        Hom centre;

        /// 2 * radius.
        int distance = 0;
    };

    /// nullopt when the homomorphism graph H^core(X) is disconnected.
    auto core_ext_radius_bound(const Graph & x, const Graph & h, std::uint64_t cap = default_hom_cap) -> std::optional<CoreExtBound>;

    struct RingExtension
    {
        std::optional<Hom> extension;

        /// Distances d(g_i, centre) in the homomorphism graph.
        std::vector<int> ring_sizes;

        /// Groups too close together, when the distance hypothesis fails.
        std::optional<std::pair<int, int>> violating_pair;
    };

    /// Ring construction: a vertex at distance r <= n_i from group i gets
    /// g_i^(r)(gamma(v)) where g_i^(0..n_i) is a shortest walk from g_i to the
    /// centre; all other vertices get centre(gamma(v)). Every pin on group i
    /// must equal g_i(gamma(v)). Needs d(X_i, X_j) >= n_i + n_j.
    auto greedy_ring_extension(const PrecolouringInstance & instance, const Graph & core, const Hom & gamma,
            const Hom & centre, const std::vector<Hom> & group_homs, std::uint64_t cap = default_hom_cap) -> RingExtension;

    /// Full pipeline: core, radius and centre, factor the pins through the
    /// core (each group must be mapped bijectively onto it), then the ring
    /// construction. nullopt when the homomorphism graph is disconnected.
    auto core_ext_extend(const PrecolouringInstance & instance, std::uint64_t cap = default_hom_cap)
        -> std::optional<std::pair<CoreExtBound, RingExtension>>;

    struct CircularCliqueBounds
    {
        /// ceil(k/q) + 1, a bound on the mixing threshold when k >= 3(q - 1) + 1.
        std::optional<Frac> threshold_bound;

        /// max{(k + 1)/2, ceil(k/q) + 1}, a bound on the circular threshold.
        Frac circular_threshold_bound;
    };

    auto circular_clique_bounds(int k, int q) -> CircularCliqueBounds;

    /// gcd(k, q) = 1, k >= 2q and k2/q2 >= max{(k + 1)/2, ceil(k/q) + 1}: the
    /// condition under which precolourings of far apart copies of G_{k,q}
    /// into G_{k2,q2} extend.
    auto circular_extension_condition(int k, int q, int k2, int q2) -> bool;

    /// G_{6,2} plus vertex 6 joined to 0, 1, 4, 5.
    auto gadget_g62x() -> Graph;
}
