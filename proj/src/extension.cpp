#include <recolour/extension.hpp>
#include <recolour/errors.hpp>
#include <recolour/generators.hpp>

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace recolour
{
    void validate_pins(const PrecolouringInstance & instance)
    {
        auto & x = instance.host;
        auto & h = instance.target;
        std::vector<int> colour(static_cast<std::size_t>(x.size()), -1);
        for (auto & pin : instance.pins) {
            if (pin.vertex < 0 || pin.vertex >= x.size())
                throw std::invalid_argument("pinned vertex " + std::to_string(pin.vertex) + " out of range");
            if (pin.colour < 0 || pin.colour >= h.size())
                throw std::invalid_argument("pinned colour " + std::to_string(pin.colour) + " out of range");
            if (colour[pin.vertex] != -1 && colour[pin.vertex] != pin.colour)
                throw std::invalid_argument("vertex " + std::to_string(pin.vertex) + " pinned twice with different colours");
            colour[pin.vertex] = pin.colour;
        }
        for (auto [u, v] : x.edges())
            if (colour[u] != -1 && colour[v] != -1 && ! h.adjacent(colour[u], colour[v]))
                throw std::invalid_argument("pins on edge " + std::to_string(u) + " " + std::to_string(v) + " are not a homomorphism");

        std::vector<bool> grouped(static_cast<std::size_t>(x.size()), false);
        for (auto & group : instance.groups)
            for (int v : group) {
                if (v < 0 || v >= x.size())
                    throw std::invalid_argument("group vertex out of range");
                if (grouped[v])
                    throw std::invalid_argument("groups are not disjoint");
                grouped[v] = true;
            }
    }

    auto extend(const PrecolouringInstance & instance, std::uint64_t node_cap) -> std::optional<Hom>
    {
        validate_pins(instance);
        HomSearch search(instance.host, instance.target);
        search.use_natural_order();
        if (node_cap)
            search.set_node_cap(node_cap);
        for (auto & pin : instance.pins)
            search.pin(pin.vertex, pin.colour);
        auto image = search.first();
        if (! image)
            return std::nullopt;
        return Hom{instance.target.size(), std::move(*image)};
    }

    auto layered_extension_check(const Graph & g, const Graph & h, const Hom & f, const Hom & g_end, int n,
            std::uint64_t cap) -> LayeredCheck
    {
        if (n < 1)
            throw std::invalid_argument("need n >= 1");
        if (! is_hom(g, h, f) || ! is_hom(g, h, g_end))
            throw std::invalid_argument("end maps must be homomorphisms");

        LayeredCheck result;
        result.distance = homotopy_distance(g, h, f, g_end, cap);

        if (n == 1) {
            // both ends pin the same single layer
            if (f == g_end) {
                result.extends = true;
                result.extension = f;
            }
        }
        else if (n == 2) {
            // every vertex is pinned; the two layers are adjacent
            Hom both{h.size(), std::vector<int>(static_cast<std::size_t>(2 * g.size()))};
            for (int a = 0 ; a < g.size() ; ++a) {
                both.image[a * 2] = f.image[a];
                both.image[a * 2 + 1] = g_end.image[a];
            }
            if (is_hom(extension_product(g, path_graph(2)), h, both)) {
                result.extends = true;
                result.extension = std::move(both);
            }
        }
        else {
            PrecolouringInstance instance{extension_product(g, path_graph(n)), h, {}, {}};
            for (int a = 0 ; a < g.size() ; ++a) {
                instance.pins.push_back({a * n, f.image[a]});
                instance.pins.push_back({a * n + n - 1, g_end.image[a]});
            }
            result.extension = extend(instance, cap);
            result.extends = result.extension.has_value();
        }

        bool predicted = result.distance && *result.distance < n;
        if (predicted != result.extends)
            throw std::logic_error("extension answer disagrees with homotopy distance");
        return result;
    }

    namespace
    {
        auto distances_from(const Graph & x, const std::vector<int> & sources) -> std::vector<int>
        {
            std::vector<int> dist(static_cast<std::size_t>(x.size()), -1);
            std::deque<int> queue;
            for (int s : sources)
                if (dist[s] == -1) {
                    dist[s] = 0;
                    queue.push_back(s);
                }
            while (! queue.empty()) {
                int u = queue.front();
                queue.pop_front();
                for (int w : x.neighbours(u))
                    if (dist[w] == -1) {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
            }
            return dist;
        }
    }

    auto group_distances(const Graph & x, const std::vector<std::vector<int>> & groups)
        -> std::vector<std::vector<std::optional<int>>>
    {
        auto t = groups.size();
        std::vector<std::vector<std::optional<int>>> result(t, std::vector<std::optional<int>>(t));
        for (std::size_t i = 0 ; i < t ; ++i) {
            auto dist = distances_from(x, groups[i]);
            for (std::size_t j = 0 ; j < t ; ++j)
                for (int v : groups[j])
                    if (dist[v] != -1 && (! result[i][j] || dist[v] < *result[i][j]))
                        result[i][j] = dist[v];
        }
        return result;
    }

    auto core_ext_radius_bound(const Graph & x, const Graph & h, std::uint64_t cap) -> std::optional<CoreExtBound>
    {
        auto core = core_of(x);
        auto rc = radius_centre(core.core, h, cap);
        if (! rc)
            return std::nullopt;
        return CoreExtBound{std::move(core), rc->radius, rc->centre, 2 * rc->radius};
    }

    auto greedy_ring_extension(const PrecolouringInstance & instance, const Graph & core, const Hom & gamma,
            const Hom & centre, const std::vector<Hom> & group_homs, std::uint64_t cap) -> RingExtension
    {
        validate_pins(instance);
        auto & x = instance.host;
        auto & h = instance.target;
        auto t = instance.groups.size();
        if (group_homs.size() != t)
            throw std::invalid_argument("need one homomorphism per group");
        if (! is_hom(x, core, gamma) || ! is_hom(core, h, centre))
            throw std::invalid_argument("gamma and the centre must be homomorphisms");

        std::vector<int> group_of(static_cast<std::size_t>(x.size()), -1);
        for (std::size_t i = 0 ; i < t ; ++i)
            for (int v : instance.groups[i])
                group_of[v] = static_cast<int>(i);
        for (auto & pin : instance.pins) {
            int i = group_of[pin.vertex];
            if (i == -1)
                throw std::invalid_argument("pin outside every group");
            if (group_homs[i].image[gamma.image[pin.vertex]] != pin.colour)
                throw std::invalid_argument("pin does not factor through the core");
        }

        RingExtension result;
        std::vector<std::vector<Hom>> paths;
        for (auto & gi : group_homs) {
            auto path = homotopy_path(core, h, gi, centre, cap);
            if (! path)
                throw std::invalid_argument("group homomorphism not connected to the centre");
            result.ring_sizes.push_back(static_cast<int>(path->size()) - 1);
            paths.push_back(std::move(*path));
        }

        auto distances = group_distances(x, instance.groups);
        for (std::size_t i = 0 ; i < t ; ++i)
            for (std::size_t j = i + 1 ; j < t ; ++j)
                if (distances[i][j] && *distances[i][j] < result.ring_sizes[i] + result.ring_sizes[j]) {
                    result.violating_pair.emplace(static_cast<int>(i), static_cast<int>(j));
                    return result;
                }

        Hom f{h.size(), std::vector<int>(static_cast<std::size_t>(x.size()), -1)};
        std::vector<std::vector<int>> from_group;
        for (auto & group : instance.groups)
            from_group.push_back(distances_from(x, group));
        for (int v = 0 ; v < x.size() ; ++v) {
            const Hom * chosen = &centre;
            for (std::size_t i = 0 ; i < t ; ++i) {
                int r = from_group[i][v];
                if (r != -1 && r <= result.ring_sizes[i]) {
                    chosen = &paths[i][r];
                    break;
                }
            }
            f.image[v] = chosen->image[gamma.image[v]];
        }

        if (! is_hom(x, h, f))
            throw std::logic_error("ring construction produced an invalid map");
        for (auto & pin : instance.pins)
            if (f.image[pin.vertex] != pin.colour)
                throw std::logic_error("ring construction moved a pin");
        result.extension = std::move(f);
        return result;
    }

    auto core_ext_extend(const PrecolouringInstance & instance, std::uint64_t cap)
        -> std::optional<std::pair<CoreExtBound, RingExtension>>
    {
        validate_pins(instance);
        auto bound = core_ext_radius_bound(instance.host, instance.target, cap);
        if (! bound)
            return std::nullopt;

        auto & core = bound->core;
        auto & gamma = core.retraction;
        std::vector<int> pinned(static_cast<std::size_t>(instance.host.size()), -1);
        for (auto & pin : instance.pins)
            pinned[pin.vertex] = pin.colour;

        std::vector<Hom> group_homs;
        for (auto & group : instance.groups) {
            // gamma restricted to the group must be a bijection onto the core
            Hom gi{instance.target.size(), std::vector<int>(static_cast<std::size_t>(core.core.size()), -1)};
            if (static_cast<int>(group.size()) != core.core.size())
                throw std::invalid_argument("group is not a copy of the core");
            for (int v : group) {
                int c = gamma.image[v];
                if (gi.image[c] != -1 || pinned[v] == -1)
                    throw std::invalid_argument("group is not fully pinned or not mapped bijectively onto the core");
                gi.image[c] = pinned[v];
            }
            if (! is_hom(core.core, instance.target, gi))
                throw std::invalid_argument("group pins are not a homomorphism of the core");
            group_homs.push_back(std::move(gi));
        }

        auto ring = greedy_ring_extension(instance, core.core, gamma, bound->centre, group_homs, cap);
        return std::make_pair(std::move(*bound), std::move(ring));
    }

    auto circular_clique_bounds(int k, int q) -> CircularCliqueBounds
    {
        if (q < 1 || k < 2 * q)
            throw std::invalid_argument("need k >= 2q >= 2");
        auto ceiling = static_cast<int>(ceil_div(k, q)) + 1;
        CircularCliqueBounds result;
        if (k >= 3 * (q - 1) + 1)
            result.threshold_bound = Frac{ceiling, 1};
        result.circular_threshold_bound = std::max(Frac{k + 1, 2}, Frac{ceiling, 1}).reduced();
        return result;
    }

    auto circular_extension_condition(int k, int q, int k2, int q2) -> bool
    {
        if (q < 1 || k < 2 * q || std::gcd(k, q) != 1 || q2 < 1)
            return false;
        return Frac{k2, q2} >= circular_clique_bounds(k, q).circular_threshold_bound;
    }

    auto gadget_g62x() -> Graph
    {
        Graph g(7, "gadget:g62x");
        for (auto [u, v] : circular_clique(6, 2).edges())
            g.add_edge(u, v);
        for (int v : {0, 1, 4, 5})
            g.add_edge(6, v);
        return g;
    }
}
