#pragma once

#include <recolour/graph.hpp>
#include <recolour/hom.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace recolour
{
    /// Steps tau_i = f(v_{i+1}) - f(v_i) mod k around a closed cycle
    /// v_0..v_l, and their sum sigma.
    struct CycleTrace
    {
        std::vector<int> cycle;
        std::vector<int> taus;
        std::int64_t sigma = 0;
        int k = 0;
        int q = 0;
    };

    /// The cycle needs at least three distinct vertices with consecutive
    /// (and last-to-first) pairs adjacent in g; f must be a (k, q)-colouring.
    auto trace(const Graph & g, const Hom & f, const std::vector<int> & cycle, int k, int q) -> CycleTrace;

    struct Constricting
    {
        bool constricting = true;
        std::optional<int> violating_vertex;
    };

    /// Every vertex's available set is a cyclic interval.
    auto is_constricting(const Graph & g, const Hom & f, int k, int q) -> Constricting;

    /// v -> k - f(v) mod k.
    auto reflect(const Hom & f, int k) -> Hom;

    /// Proof that G is not (k, q)-mixing: on F, every (k, q)-colouring is
    /// constricting, so sigma along the cycle is constant on components, and
    /// g and its reflection disagree on sigma.
    struct NonMixingCertificate
    {
        int k = 0;
        int q = 0;

        /// Vertices of F, a clique or an odd cycle.
        std::vector<int> subgraph;
        bool subgraph_is_clique = false;
        std::vector<int> cycle;
        Hom g;
        Hom reflected;
        std::int64_t sigma = 0;
        std::int64_t reflected_sigma = 0;
    };

    /// Shortest odd cycle in a loop-free graph, in walking order, or empty.
    auto shortest_odd_cycle(const Graph & g) -> std::vector<int>;

    /// Throws std::invalid_argument for a bipartite or looped G or for
    /// k/q >= max{4, omega + 1}, and NoColourings when G has no (k, q)-colouring.
    /// Returns nullopt if sigma does not separate g from its reflection.
    auto nonmixing_certificate(const Graph & g, int k, int q) -> std::optional<NonMixingCertificate>;

    /// Independent re-check of every claim in the certificate.
    auto verify_certificate(const Graph & g, const NonMixingCertificate & certificate) -> bool;
}
