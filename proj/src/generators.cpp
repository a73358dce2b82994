#include <recolour/generators.hpp>

#include <stdexcept>
#include <string>

namespace recolour
{
    auto complete_graph(int r) -> Graph
    {
        if (r < 1)
            throw std::invalid_argument("complete graph needs r >= 1");
        Graph g(r, "K" + std::to_string(r));
        for (int u = 0 ; u < r ; ++u)
            for (int v = u + 1 ; v < r ; ++v)
                g.add_edge(u, v);
        return g;
    }

    auto cycle_graph(int r, bool reflexive) -> Graph
    {
        if (r < 3)
            throw std::invalid_argument("cycle needs r >= 3");
        Graph g(r, (reflexive ? "reflexive C" : "C") + std::to_string(r));
        for (int v = 0 ; v < r ; ++v) {
            g.add_edge(v, (v + 1) % r);
            if (reflexive)
                g.add_edge(v, v);
        }
        return g;
    }

    auto path_graph(int n, bool reflexive) -> Graph
    {
        if (n < 1)
            throw std::invalid_argument("path needs n >= 1");
        Graph g(n, (reflexive ? "I" : "P") + std::to_string(n));
        for (int v = 0 ; v + 1 < n ; ++v)
            g.add_edge(v, v + 1);
        if (reflexive)
            for (int v = 0 ; v < n ; ++v)
                g.add_edge(v, v);
        return g;
    }

    auto circular_clique(int k, int q) -> Graph
    {
        if (q < 1 || k < 2 * q)
            throw std::invalid_argument("circular clique needs k >= 2q >= 2");
        Graph g(k, "G" + std::to_string(k) + "," + std::to_string(q));
        for (int i = 0 ; i < k ; ++i)
            for (int j = i + 1 ; j < k ; ++j)
                if (q <= j - i && j - i <= k - q)
                    g.add_edge(i, j);
        return g;
    }

    auto frozen_family(int d, int q) -> Graph
    {
        if (d < 2 || q < 2)
            throw std::invalid_argument("frozen family needs d >= 2 and q >= 2");
        int k = (2 * q - 1) * d + 1;
        Graph g(k, "F" + std::to_string(d) + "," + std::to_string(q));
        for (int i = 0 ; i < k ; ++i)
            for (int t = 0 ; t < d ; ++t)
                g.add_edge(i, (i + q + t * (2 * q - 1)) % k);
        return g;
    }

    auto star_graph(int leaves) -> Graph
    {
        if (leaves < 1)
            throw std::invalid_argument("star needs at least one leaf");
        Graph g(leaves + 1, "K1," + std::to_string(leaves));
        for (int v = 1 ; v <= leaves ; ++v)
            g.add_edge(0, v);
        return g;
    }

    auto complete_bipartite(int a, int b) -> Graph
    {
        if (a < 1 || b < 1)
            throw std::invalid_argument("complete bipartite needs both sides nonempty");
        Graph g(a + b, "K" + std::to_string(a) + "," + std::to_string(b));
        for (int u = 0 ; u < a ; ++u)
            for (int v = 0 ; v < b ; ++v)
                g.add_edge(u, a + v);
        return g;
    }

    auto empty_graph(int n, bool reflexive) -> Graph
    {
        Graph g(n);
        if (reflexive)
            for (int v = 0 ; v < n ; ++v)
                g.add_edge(v, v);
        return g;
    }

    auto categorical_product(const Graph & g, const Graph & h) -> Graph
    {
        int nh = h.size();
        Graph result(g.size() * nh);
        for (auto [a1, a2] : g.edges())
            for (auto [b1, b2] : h.edges()) {
                result.add_edge(a1 * nh + b1, a2 * nh + b2);
                result.add_edge(a1 * nh + b2, a2 * nh + b1);
            }
        return result;
    }

    auto extension_product(const Graph & g, const Graph & f) -> Graph
    {
        int nf = f.size();
        Graph result(g.size() * nf);
        for (auto [a1, a2] : g.edges())
            for (int i = 0 ; i < nf ; ++i)
                for (int j = 0 ; j < nf ; ++j)
                    if (i == j || f.adjacent(i, j))
                        result.add_edge(a1 * nf + i, a2 * nf + j);
        return result;
    }

    auto disjoint_union(const Graph & a, const Graph & b) -> Graph
    {
        Graph result(a.size() + b.size());
        for (auto [u, v] : a.edges())
            result.add_edge(u, v);
        for (auto [u, v] : b.edges())
            result.add_edge(a.size() + u, a.size() + v);
        return result;
    }
}
