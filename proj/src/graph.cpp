#include <recolour/graph.hpp>

#include <algorithm>
#include <atomic>
#include <stdexcept>

namespace recolour
{
    namespace
    {
        std::atomic<int> configured_vertex_cap{4096};
    }

    auto Graph::vertex_cap() -> int
    {
        return configured_vertex_cap.load();
    }

    void Graph::set_vertex_cap(int cap)
    {
        if (cap < 1)
            throw std::invalid_argument("vertex cap must be positive");
        configured_vertex_cap.store(cap);
    }

    Graph::Graph(int n, std::string name) :
        name_(std::move(name))
    {
        if (n < 0)
            throw std::invalid_argument("negative vertex count");
        if (n > vertex_cap())
            throw std::invalid_argument("vertex count " + std::to_string(n) + " exceeds cap " + std::to_string(vertex_cap()));
        rows_.assign(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
    }

    auto Graph::has_loops() const -> bool
    {
        for (int v = 0 ; v < size() ; ++v)
            if (has_loop(v))
                return true;
        return false;
    }

    void Graph::add_edge(int u, int v)
    {
        if (u < 0 || v < 0 || u >= size() || v >= size())
            throw std::out_of_range("edge endpoint out of range");
        rows_[u].set(static_cast<std::size_t>(v));
        rows_[v].set(static_cast<std::size_t>(u));
    }

    void Graph::remove_edge(int u, int v)
    {
        if (u < 0 || v < 0 || u >= size() || v >= size())
            throw std::out_of_range("edge endpoint out of range");
        rows_[u].reset(static_cast<std::size_t>(v));
        rows_[v].reset(static_cast<std::size_t>(u));
    }

    auto Graph::neighbours(int v) const -> std::vector<int>
    {
        return rows_[v].to_vector();
    }

    auto Graph::edges() const -> std::vector<std::pair<int, int>>
    {
        std::vector<std::pair<int, int>> result;
        for (int u = 0 ; u < size() ; ++u)
            for (auto v = rows_[u].next(static_cast<std::size_t>(u)) ; v < rows_[u].size() ; v = rows_[u].next(v + 1))
                result.emplace_back(u, static_cast<int>(v));
        return result;
    }

    auto Graph::edge_count() const -> std::size_t
    {
        std::size_t twice = 0, loops = 0;
        for (int v = 0 ; v < size() ; ++v) {
            twice += rows_[v].count();
            if (has_loop(v))
                ++loops;
        }
        return (twice - loops) / 2 + loops;
    }

    auto Graph::loop_set() const -> Bitset
    {
        Bitset result(static_cast<std::size_t>(size()));
        for (int v = 0 ; v < size() ; ++v)
            if (has_loop(v))
                result.set(static_cast<std::size_t>(v));
        return result;
    }

    auto Graph::induced(std::span<const int> vertices) const -> Graph
    {
        Graph result(static_cast<int>(vertices.size()));
        for (std::size_t i = 0 ; i < vertices.size() ; ++i)
            for (std::size_t j = i ; j < vertices.size() ; ++j)
                if (adjacent(vertices[i], vertices[j]))
                    result.add_edge(static_cast<int>(i), static_cast<int>(j));
        return result;
    }

    auto Graph::without_vertex(int v) const -> Graph
    {
        std::vector<int> keep;
        for (int u = 0 ; u < size() ; ++u)
            if (u != v)
                keep.push_back(u);
        return induced(keep);
    }

    auto Graph::with_all_loops() const -> Graph
    {
        Graph result = *this;
        for (int v = 0 ; v < size() ; ++v)
            result.add_edge(v, v);
        return result;
    }

    auto Graph::components() const -> std::vector<std::vector<int>>
    {
        std::vector<int> comp(static_cast<std::size_t>(size()), -1);
        std::vector<std::vector<int>> result;
        for (int s = 0 ; s < size() ; ++s) {
            if (comp[s] != -1)
                continue;
            int id = static_cast<int>(result.size());
            result.emplace_back();
            std::vector<int> stack{s};
            comp[s] = id;
            while (! stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                result.back().push_back(u);
                for (auto w = rows_[u].first() ; w < rows_[u].size() ; w = rows_[u].next(w + 1))
                    if (comp[w] == -1) {
                        comp[w] = id;
                        stack.push_back(static_cast<int>(w));
                    }
            }
            std::sort(result.back().begin(), result.back().end());
        }
        return result;
    }
}
