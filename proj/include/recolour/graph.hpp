#pragma once

#include <recolour/bitset.hpp>

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace recolour
{
    /// Finite undirected graph on vertices 0..n-1, no multi-edges, loops
    /// allowed. Adjacency is a symmetric relation stored as packed bit rows;
    /// a loop at v is the diagonal entry (v, v), so v is its own neighbour.
    class Graph
    {
    public:
        Graph() = default;
        explicit Graph(int n, std::string name = {});

        auto size() const -> int { return static_cast<int>(rows_.size()); }
        auto name() const -> const std::string & { return name_; }
        void set_name(std::string name) { name_ = std::move(name); }

        auto adjacent(int u, int v) const -> bool { return rows_[u].test(static_cast<std::size_t>(v)); }
        auto has_loop(int v) const -> bool { return adjacent(v, v); }
        auto has_loops() const -> bool;

        void add_edge(int u, int v);
        void remove_edge(int u, int v);

        /// Neighbour set as a bit row, loops included.
        auto row(int v) const -> const Bitset & { return rows_[v]; }
        auto neighbours(int v) const -> std::vector<int>;
        auto degree(int v) const -> int { return static_cast<int>(rows_[v].count()); }

        /// Each undirected edge once as (u, v) with u <= v.
        auto edges() const -> std::vector<std::pair<int, int>>;
        auto edge_count() const -> std::size_t;
        auto loop_set() const -> Bitset;

        auto induced(std::span<const int> vertices) const -> Graph;
        auto without_vertex(int v) const -> Graph;
        auto with_all_loops() const -> Graph;

        /// Connected components, each listed in increasing vertex order;
        /// components ordered by smallest vertex.
        auto components() const -> std::vector<std::vector<int>>;

        /// Label-sensitive equality; the name is not compared.
        friend auto operator==(const Graph & a, const Graph & b) -> bool { return a.rows_ == b.rows_; }

        static auto vertex_cap() -> int;
        static void set_vertex_cap(int cap);

    private:
        std::string name_;
        std::vector<Bitset> rows_;
    };
}
