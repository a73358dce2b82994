#pragma once

#include <recolour/bitset.hpp>
#include <recolour/graph.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace recolour
{
    inline constexpr std::uint64_t default_hom_cap = 10'000'000;

    /// A total map V(G) -> V(H), stored as the image array.
    struct Hom
    {
        int target_n = 0;
        std::vector<int> image;

        auto source_n() const -> int { return static_cast<int>(image.size()); }
        auto operator()(int v) const -> int { return image[v]; }

        friend auto operator<=>(const Hom & a, const Hom & b) -> std::weak_ordering
        {
            return a.image <=> b.image;
        }

        friend auto operator==(const Hom & a, const Hom & b) -> bool = default;
    };

    /// Throws std::invalid_argument on a length or range violation.
    auto is_hom(const Graph & g, const Graph & h, std::span<const int> image) -> bool;
    auto is_hom(const Graph & g, const Graph & h, const Hom & f) -> bool;

    /// Pointwise x -> g(f(x)).
    auto compose(const Hom & f, const Hom & g) -> Hom;
    auto identity_hom(const Graph & g) -> Hom;
    auto is_surjective(const Hom & f) -> bool;

    /// Backtracking homomorphism search with forward checking. Every
    /// unassigned vertex keeps a domain; assigning v = c intersects the
    /// domains of v's later neighbours with N_H(c).
    class HomSearch
    {
    public:
        HomSearch(const Graph & g, const Graph & h);
        HomSearch(Graph &&, const Graph &) = delete;
        HomSearch(const Graph &, Graph &&) = delete;
        HomSearch(Graph &&, Graph &&) = delete;

        /// Restrict v to the given colours (list homomorphisms).
        void restrict(int v, const Bitset & allowed);
        void pin(int v, int c);

        /// Visit vertices 0..n-1 in order. With ascending colour choice this
        /// makes solutions arrive in lexicographic order.
        void use_natural_order() { natural_order_ = true; }

        /// Throw CapExceeded once more than this many assignments were tried.
        void set_node_cap(std::uint64_t cap) { node_cap_ = cap; }

        /// Calls visit on every solution until it returns false. Returns false
        /// if stopped early.
        auto run(const std::function<bool (std::span<const int>)> & visit) -> bool;

        auto first() -> std::optional<std::vector<int>>;
        auto nodes() const -> std::uint64_t { return nodes_; }

        /// The vertex the search branches on first, or -1 for an empty source.
        auto first_vertex() -> int;

    private:
        const Graph & g_;
        const Graph & h_;
        std::vector<Bitset> initial_;
        bool natural_order_ = false;
        std::uint64_t node_cap_ = 0;
        std::uint64_t nodes_ = 0;

        auto order() const -> std::vector<int>;
    };

    /// HOM(G, H) as a lexicographically sorted list.
    class HomSpace
    {
    public:
        HomSpace() = default;

        /// `images` must already be sorted and duplicate-free, count * source_n
        /// entries.
        HomSpace(int source_n, int target_n, std::vector<int> images);

        auto size() const -> std::size_t { return count_; }
        auto empty() const -> bool { return count_ == 0; }
        auto source_n() const -> int { return source_n_; }
        auto target_n() const -> int { return target_n_; }

        auto operator[](std::size_t i) const -> std::span<const int>
        {
            return {images_.data() + i * static_cast<std::size_t>(source_n_), static_cast<std::size_t>(source_n_)};
        }

        auto hom(std::size_t i) const -> Hom;

        /// Position of the given image, if present.
        auto index_of(std::span<const int> image) const -> std::optional<std::size_t>;

        /// Base-t codes of the images, present when t^n fits in 63 bits.
        auto has_codes() const -> bool { return ! codes_.empty(); }
        auto code(std::size_t i) const -> std::uint64_t { return codes_[i]; }
        auto index_of_code(std::uint64_t code) const -> std::optional<std::size_t>;

    private:
        int source_n_ = 0;
        int target_n_ = 0;
        std::size_t count_ = 0;
        std::vector<int> images_;
        std::vector<std::uint64_t> codes_;
        std::vector<std::int32_t> table_;
    };

    /// Number of worker threads used by enumerate_homs (default 1).
    auto search_threads() -> int;
    void set_search_threads(int threads);

    /// Complete enumeration; throws CapExceeded if there are more than cap
    /// homomorphisms. The result does not depend on the thread count.
    auto enumerate_homs(const Graph & g, const Graph & h, std::uint64_t cap = default_hom_cap) -> HomSpace;

    auto hom_exists(const Graph & g, const Graph & h) -> bool;
    auto find_hom(const Graph & g, const Graph & h) -> std::optional<Hom>;
}
