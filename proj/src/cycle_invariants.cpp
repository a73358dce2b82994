#include <recolour/cycle_invariants.hpp>
#include <recolour/circular.hpp>
#include <recolour/errors.hpp>
#include <recolour/generators.hpp>
#include <recolour/parameters.hpp>

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace recolour
{
    auto trace(const Graph & g, const Hom & f, const std::vector<int> & cycle, int k, int q) -> CycleTrace
    {
        if (cycle.size() < 3)
            throw std::invalid_argument("a cycle needs at least three vertices");
        std::vector<bool> seen(static_cast<std::size_t>(g.size()), false);
        for (std::size_t i = 0 ; i < cycle.size() ; ++i) {
            int v = cycle[i], w = cycle[(i + 1) % cycle.size()];
            if (v < 0 || v >= g.size() || seen[v])
                throw std::invalid_argument("cycle vertices must be distinct and in range");
            seen[v] = true;
            if (w < 0 || w >= g.size() || ! g.adjacent(v, w))
                throw std::invalid_argument("cycle uses a non-edge " + std::to_string(v) + " " + std::to_string(w));
        }
        if (! is_hom(g, circular_clique(k, q), f))
            throw std::invalid_argument("not a (k, q)-colouring");

        CycleTrace result{cycle, {}, 0, k, q};
        for (std::size_t i = 0 ; i < cycle.size() ; ++i) {
            int tau = ((f.image[cycle[(i + 1) % cycle.size()]] - f.image[cycle[i]]) % k + k) % k;
            if (tau < q || tau > k - q)
                throw std::logic_error("step outside [q, k - q]");
            result.taus.push_back(tau);
            result.sigma += tau;
        }
        return result;
    }

    auto is_constricting(const Graph & g, const Hom & f, int k, int q) -> Constricting
    {
        for (int v = 0 ; v < g.size() ; ++v)
            if (! available_colours(g, f.image, v, k, q).interval)
                return Constricting{false, v};
        return Constricting{};
    }

    auto reflect(const Hom & f, int k) -> Hom
    {
        Hom result{f.target_n, {}};
        for (int c : f.image)
            result.image.push_back((k - c) % k);
        return result;
    }

    auto shortest_odd_cycle(const Graph & g) -> std::vector<int>
    {
        std::vector<int> best;
        int n = g.size();
        for (int s = 0 ; s < n ; ++s) {
            std::vector<int> dist(static_cast<std::size_t>(n), -1), parent(static_cast<std::size_t>(n), -1);
            std::deque<int> queue{s};
            dist[s] = 0;
            while (! queue.empty()) {
                int u = queue.front();
                queue.pop_front();
                for (int w : g.neighbours(u))
                    if (dist[w] == -1) {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    }
            }

            for (auto [u, w] : g.edges()) {
                if (u == w || dist[u] == -1 || dist[u] != dist[w])
                    continue;
                if (! best.empty() && 2 * dist[u] + 1 >= static_cast<int>(best.size()))
                    continue;
                // s .. u, then w .. back towards s
                std::vector<int> left, right;
                for (int x = u ; x != -1 ; x = parent[x])
                    left.push_back(x);
                for (int x = w ; x != -1 ; x = parent[x])
                    right.push_back(x);
                std::reverse(left.begin(), left.end());
                right.pop_back();
                std::vector<int> cycle = left;
                cycle.insert(cycle.end(), right.begin(), right.end());
                auto sorted = cycle;
                std::sort(sorted.begin(), sorted.end());
                if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end())
                    best = std::move(cycle);
            }
        }
        return best;
    }

    auto nonmixing_certificate(const Graph & g, int k, int q) -> std::optional<NonMixingCertificate>
    {
        if (g.has_loops())
            throw std::invalid_argument("certificates need a loop-free graph");
        if (is_bipartite(g))
            throw std::invalid_argument("certificates need a non-bipartite graph");
        auto clique = maximum_clique(g);
        int omega = static_cast<int>(clique.size());
        if (! (Frac{k, q} < Frac{std::max(4, omega + 1), 1}))
            throw std::invalid_argument("need k/q < max{4, omega + 1}");

        auto h = circular_clique(k, q);
        auto g_colouring = find_hom(g, h);
        if (! g_colouring)
            throw NoColourings();

        NonMixingCertificate cert;
        cert.k = k;
        cert.q = q;
        cert.g = *g_colouring;
        cert.reflected = reflect(cert.g, k);
        if (omega >= 4) {
            cert.subgraph = clique;
            cert.subgraph_is_clique = true;
            cert.cycle = clique;
            std::sort(cert.cycle.begin(), cert.cycle.end(), [&] (int a, int b) {
                return cert.g.image[a] < cert.g.image[b];
            });
        }
        else {
            cert.cycle = shortest_odd_cycle(g);
            cert.subgraph = cert.cycle;
            std::sort(cert.subgraph.begin(), cert.subgraph.end());
        }

        cert.sigma = trace(g, cert.g, cert.cycle, k, q).sigma;
        cert.reflected_sigma = trace(g, cert.reflected, cert.cycle, k, q).sigma;
        if (cert.sigma == cert.reflected_sigma)
            return std::nullopt;
        return cert;
    }

    auto verify_certificate(const Graph & g, const NonMixingCertificate & c) -> bool
    {
        try {
            if (c.q < 1 || c.k < 2 * c.q)
                return false;
            auto h = circular_clique(c.k, c.q);
            if (! is_hom(g, h, c.g) || ! is_hom(g, h, c.reflected))
                return false;
            for (int v = 0 ; v < g.size() ; ++v)
                if (c.reflected.image[v] != (c.k - c.g.image[v]) % c.k)
                    return false;

            // F must be exactly the cycle's vertex set
            auto vertices = c.cycle;
            std::sort(vertices.begin(), vertices.end());
            if (vertices != c.subgraph)
                return false;

            // every colouring of F is constricting: k/q < 4 in general, or
            // k/q < r + 1 when F is an r-clique
            int r = static_cast<int>(c.subgraph.size());
            bool clique = true;
            for (int a : c.subgraph)
                for (int b : c.subgraph)
                    if (a != b && ! g.adjacent(a, b))
                        clique = false;
            if (c.subgraph_is_clique && ! clique)
                return false;
            Frac ratio{c.k, c.q};
            bool constricting = ratio < Frac{4, 1} || (clique && ratio < Frac{r + 1, 1});
            if (! constricting)
                return false;

            auto t1 = trace(g, c.g, c.cycle, c.k, c.q);
            auto t2 = trace(g, c.reflected, c.cycle, c.k, c.q);
            return t1.sigma == c.sigma && t2.sigma == c.reflected_sigma && c.sigma != c.reflected_sigma
                && t1.sigma % c.k == 0 && t1.sigma + t2.sigma == static_cast<std::int64_t>(c.cycle.size()) * c.k;
        }
        catch (const std::invalid_argument &) {
            return false;
        }
    }
}
