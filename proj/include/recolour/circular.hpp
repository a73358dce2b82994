#pragma once

#include <recolour/frac.hpp>
#include <recolour/graph.hpp>
#include <recolour/hom.hpp>
#include <recolour/hom_graph.hpp>
#include <recolour/structure.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace recolour
{
    /// The unique (k', q') with kq' - k'q = 1 and 1 <= q' <= q.
    struct LowerParent
    {
        std::int64_t k = 0;
        std::int64_t q = 0;
        std::int64_t parent_k = 0;
        std::int64_t parent_q = 0;
    };

    /// Needs gcd(k, q) = 1 and k >= 2q.
    auto lower_parent(std::int64_t k, std::int64_t q) -> LowerParent;

    struct LowerParentBound
    {
        LowerParent parent;

        /// j/p + (q' - p)/(pqq').
        Frac bound;
        bool holds = false;

        /// q' = p, where the bound reads k'/q' >= j/p.
        bool equal_denominators = false;

        /// q' > p, where k'/q' > j/p follows.
        bool strict = false;
    };

    /// For k/q > j/p. Throws std::invalid_argument otherwise.
    auto lower_parent_bound(std::int64_t k, std::int64_t q, std::int64_t j, std::int64_t p) -> LowerParentBound;

    struct AvailableColours
    {
        std::vector<int> colours;

        /// Cyclically contiguous mod k; empty, singleton and full sets count.
        bool interval = false;
    };

    /// Colours v could take in a (k, q)-colouring f with every other vertex
    /// fixed: all colours outside [f(u) - q + 1, f(u) + q - 1] for u in N(v).
    auto available_colours(const Graph & g, std::span<const int> f, int v, int k, int q) -> AvailableColours;

    auto is_cyclic_interval(const std::vector<int> & sorted_colours, int k) -> bool;

    struct Flexibility
    {
        bool flexible = false;

        /// Representative of a class with only surjective colourings.
        std::optional<Hom> witness;
    };

    /// Throws NoColourings on an empty HOM(G, G_{k,q}). Loop-free G.
    auto is_flexible(const Graph & g, int k, int q, std::uint64_t cap = default_hom_cap) -> Flexibility;

    /// A colour-graph walk from f to a colouring avoiding colour 0, pushing
    /// the missing colour along i, i + q, i + 2q, ... The walk excludes f and
    /// is empty when f already avoids 0. Needs gcd(k, q) = 1 and a
    /// non-surjective f.
    auto avoid_colour_normalize(const Graph & g, const Hom & f, int k, int q) -> std::vector<Hom>;

    struct ScaleRetraction
    {
        /// u -> floor(u / d), G_{kd,qd} -> G_{k,q}.
        Hom retraction;

        /// u -> du, G_{k,q} -> G_{kd,qd}.
        Hom section;
    };

    /// Both maps are verified; throws std::logic_error if either check fails.
    auto scale_retraction(int k, int q, int d) -> ScaleRetraction;

    struct VertexDeletion
    {
        /// G_{kd,qd} - i, labelled 0..kd-2 in increasing order of the original labels.
        Graph start;
        std::vector<FoldStep> steps;
        Graph residual;

        /// Residual label to original G_{kd,qd} label.
        std::vector<int> residual_vertices;

        /// Isomorphism residual -> G_{k(d-1), q(d-1)} (d >= 2) or the lower
        /// parent (d = 1).
        Hom isomorphism;
        int target_k = 0;
        int target_q = 0;
    };

    /// For d >= 2 folds i + jdq into i + jdq - 1 for j = 1..k-1 and relabels
    /// the rest onto G_{k(d-1), q(d-1)}. For d = 1 runs a stiff reduction
    /// and finds an isomorphism onto the lower parent. Every step is checked.
    auto delete_vertex_dismantle(int k, int q, int d, int i) -> VertexDeletion;

    enum class ScanVerdict
    {
        mixing,
        not_mixing,
        no_colourings,
        skipped
    };

    auto to_string(ScanVerdict verdict) -> std::string;

    struct MixingScanRow
    {
        Frac frac;
        ScanVerdict verdict = ScanVerdict::skipped;
        std::uint64_t hom_count = 0;
        std::uint64_t class_count = 0;
        std::optional<std::pair<Hom, Hom>> witness;
    };

    /// A bound on the circular mixing threshold or number together with the
    /// result it comes from.
    struct ScanBound
    {
        std::string quantity;
        std::string relation;
        Frac value;
        std::string source;
    };

    struct MixingScan
    {
        std::vector<MixingScanRow> rows;
        std::vector<ScanBound> bounds;
    };

    /// Each row is decided by a full component computation; a row hitting
    /// the cap is recorded as skipped. Loop-free G only.
    auto mixing_scan(const Graph & g, const std::vector<Frac> & fracs, std::uint64_t cap = default_hom_cap) -> MixingScan;
}
