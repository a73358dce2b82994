#include <recolour/parameters.hpp>
#include <recolour/errors.hpp>
#include <recolour/generators.hpp>
#include <recolour/hom.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace recolour
{
    auto colouring_number(const Graph & g) -> ColouringNumber
    {
        int n = g.size();
        std::vector<int> deg(static_cast<std::size_t>(n));
        for (int v = 0 ; v < n ; ++v)
            deg[v] = g.degree(v) - (g.has_loop(v) ? 1 : 0);

        std::vector<bool> removed(static_cast<std::size_t>(n), false);
        std::vector<int> removal;
        int worst = 0;
        for (int step = 0 ; step < n ; ++step) {
            int best = -1;
            for (int v = 0 ; v < n ; ++v)
                if (! removed[v] && (best == -1 || deg[v] < deg[best]))
                    best = v;
            worst = std::max(worst, deg[best]);
            removed[best] = true;
            removal.push_back(best);
            for (int u : g.neighbours(best))
                if (! removed[u])
                    --deg[u];
        }

        ColouringNumber result;
        result.value = n == 0 ? 0 : worst + 1;
        result.order.assign(removal.rbegin(), removal.rend());
        return result;
    }

    namespace
    {
        struct CliqueSearch
        {
            const Graph & g;
            std::uint64_t node_cap;
            std::uint64_t nodes = 0;
            std::vector<int> current, best;

            void expand(Bitset candidates)
            {
                if (++nodes > node_cap)
                    throw CapExceeded(node_cap);

                if (! candidates.any()) {
                    if (current.size() > best.size())
                        best = current;
                    return;
                }

                // simple bound: current plus every candidate
                if (current.size() + candidates.count() <= best.size())
                    return;

                for (auto v = candidates.first() ; v < candidates.size() ; v = candidates.next(v + 1)) {
                    if (current.size() + candidates.count() <= best.size())
                        return;
                    current.push_back(static_cast<int>(v));
                    Bitset next = candidates;
                    next &= g.row(static_cast<int>(v));
                    expand(next);
                    current.pop_back();
                    candidates.reset(v);
                }
                if (current.size() > best.size())
                    best = current;
            }
        };
    }

    auto maximum_clique(const Graph & g, std::uint64_t node_cap) -> std::vector<int>
    {
        if (g.has_loops())
            throw std::invalid_argument("clique number is defined here for loop-free graphs only");
        CliqueSearch search{g, node_cap, 0, {}, {}};
        search.expand(Bitset(static_cast<std::size_t>(g.size()), true));
        std::sort(search.best.begin(), search.best.end());
        return search.best;
    }

    auto clique_number(const Graph & g, std::uint64_t node_cap) -> int
    {
        return static_cast<int>(maximum_clique(g, node_cap).size());
    }

    auto degrees(const Graph & g) -> Degrees
    {
        Degrees result;
        for (int v = 0 ; v < g.size() ; ++v)
            result.per_vertex.push_back(g.degree(v));
        if (! result.per_vertex.empty()) {
            result.max = *std::max_element(result.per_vertex.begin(), result.per_vertex.end());
            result.min = *std::min_element(result.per_vertex.begin(), result.per_vertex.end());
        }
        return result;
    }

    auto is_bipartite(const Graph & g) -> bool
    {
        std::vector<int> side(static_cast<std::size_t>(g.size()), -1);
        for (int s = 0 ; s < g.size() ; ++s) {
            if (side[s] != -1)
                continue;
            side[s] = 0;
            std::vector<int> stack{s};
            while (! stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int w : g.neighbours(u)) {
                    if (side[w] == -1) {
                        side[w] = 1 - side[u];
                        stack.push_back(w);
                    }
                    else if (side[w] == side[u])
                        return false;
                }
            }
        }
        return true;
    }

    auto chromatic_number(const Graph & g) -> int
    {
        if (g.has_loops())
            throw std::invalid_argument("chromatic number needs a loop-free graph");
        if (g.size() == 0)
            return 0;
        for (int r = 1 ; ; ++r)
            if (hom_exists(g, complete_graph(r)))
                return r;
    }

    auto circular_chromatic_number(const Graph & g, int max_q) -> Frac
    {
        if (g.has_loops())
            throw std::invalid_argument("circular chromatic number needs a loop-free graph");
        if (max_q < 1)
            throw std::invalid_argument("max_q must be positive");
        if (g.edge_count() == 0)
            return Frac{2, 1};

        int chi = chromatic_number(g);
        std::vector<Frac> candidates;
        for (int q = 1 ; q <= max_q ; ++q)
            for (int k = 2 * q ; k <= chi * q ; ++k)
                if (std::gcd(k, q) == 1)
                    candidates.push_back(Frac{k, q});
        std::stable_sort(candidates.begin(), candidates.end(),
                [] (const Frac & a, const Frac & b) { return a < b; });

        for (auto & f : candidates)
            if (hom_exists(g, circular_clique(static_cast<int>(f.k), static_cast<int>(f.q))))
                return f;
        return Frac{chi, 1};
    }
}
