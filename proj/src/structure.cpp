#include <recolour/structure.hpp>
#include <recolour/errors.hpp>
#include <recolour/hom_graph.hpp>
#include <recolour/parameters.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace recolour
{
    auto is_fold(const Graph & g, int v, int u) -> bool
    {
        return v != u && g.row(v).is_subset_of(g.row(u));
    }

    auto all_folds(const Graph & g) -> std::vector<std::pair<int, int>>
    {
        std::vector<std::pair<int, int>> result;
        for (int v = 0 ; v < g.size() ; ++v)
            for (int u = 0 ; u < g.size() ; ++u)
                if (is_fold(g, v, u))
                    result.emplace_back(v, u);
        return result;
    }

    auto find_fold(const Graph & g) -> std::optional<FoldStep>
    {
        for (int v = 0 ; v < g.size() ; ++v)
            for (int u = 0 ; u < g.size() ; ++u)
                if (is_fold(g, v, u))
                    return apply_fold(g, v, u).second;
        return std::nullopt;
    }

    auto apply_fold(const Graph & g, int v, int u) -> std::pair<Graph, FoldStep>
    {
        if (v < 0 || u < 0 || v >= g.size() || u >= g.size() || ! is_fold(g, v, u))
            throw std::invalid_argument("(" + std::to_string(v) + ", " + std::to_string(u) + ") is not a fold");
        FoldStep step{v, u, std::vector<int>(static_cast<std::size_t>(g.size()), -1)};
        for (int w = 0, next = 0 ; w < g.size() ; ++w)
            if (w != v)
                step.relabel[w] = next++;
        return {g.without_vertex(v), std::move(step)};
    }

    namespace
    {
        template <typename Choose>
        auto reduce(const Graph & g, Choose && choose) -> StiffReduction
        {
            StiffReduction result;
            Graph current = g;
            std::vector<int> vertices(static_cast<std::size_t>(g.size()));
            std::iota(vertices.begin(), vertices.end(), 0);

            // where each input vertex currently sits
            std::vector<int> position = vertices;

            while (true) {
                auto folds = all_folds(current);
                if (folds.empty())
                    break;
                auto [v, u] = choose(folds);
                auto [next, step] = apply_fold(current, v, u);
                for (auto & p : position)
                    p = step.relabel[p == v ? u : p];
                vertices.erase(vertices.begin() + v);
                result.steps.push_back(std::move(step));
                current = std::move(next);
            }

            result.terminal = std::move(current);
            result.terminal_vertices = std::move(vertices);
            result.retraction = Hom{result.terminal.size(), std::move(position)};
            return result;
        }
    }

    auto stiff_reduction(const Graph & g) -> StiffReduction
    {
        return reduce(g, [] (const std::vector<std::pair<int, int>> & folds) { return folds.front(); });
    }

    auto stiff_reduction(const Graph & g, std::mt19937_64 & rng) -> StiffReduction
    {
        return reduce(g, [&] (const std::vector<std::pair<int, int>> & folds) {
            std::uniform_int_distribution<std::size_t> pick(0, folds.size() - 1);
            return folds[pick(rng)];
        });
    }

    auto replay(const Graph & g, const std::vector<FoldStep> & steps) -> Graph
    {
        Graph current = g;
        for (auto & step : steps) {
            auto [next, check] = apply_fold(current, step.removed, step.absorber);
            if (check.relabel != step.relabel)
                throw std::invalid_argument("fold step carries an inconsistent relabelling");
            current = std::move(next);
        }
        return current;
    }

    auto non_identity_endomorphism(const Graph & g, std::uint64_t node_cap) -> std::optional<Hom>
    {
        HomSearch search(g, g);
        search.set_node_cap(node_cap);
        std::optional<Hom> found;
        search.run([&] (std::span<const int> image) {
            for (int v = 0 ; v < g.size() ; ++v)
                if (image[v] != v) {
                    found.emplace(Hom{g.size(), std::vector<int>(image.begin(), image.end())});
                    return false;
                }
            return true;
        });
        return found;
    }

    auto is_rigid(const Graph & g, std::uint64_t node_cap) -> bool
    {
        return ! non_identity_endomorphism(g, node_cap);
    }

    auto is_dismantlable(const Graph & g, std::uint64_t node_cap) -> Dismantlability
    {
        Dismantlability result;
        result.reduction = stiff_reduction(g);
        result.witness = non_identity_endomorphism(result.reduction.terminal, node_cap);
        result.dismantlable = ! result.witness;
        result.reduction.terminal_is_rigid = result.dismantlable;
        return result;
    }

    auto is_retraction(const Graph & x, const Graph & y, const Hom & r, const Hom & section) -> bool
    {
        if (r.source_n() != x.size() || r.target_n != y.size() || section.source_n() != y.size() || section.target_n != x.size())
            throw std::invalid_argument("retraction and section do not match the graphs");
        if (! is_hom(x, y, r) || ! is_hom(y, x, section))
            return false;
        for (int v = 0 ; v < y.size() ; ++v)
            if (r.image[section.image[v]] != v)
                return false;
        return true;
    }

    auto find_isomorphism(const Graph & a, const Graph & b) -> std::optional<Hom>
    {
        if (a.size() != b.size() || a.edge_count() != b.edge_count())
            return std::nullopt;
        std::optional<Hom> found;
        std::vector<bool> used(static_cast<std::size_t>(b.size()));
        HomSearch(a, b).run([&] (std::span<const int> image) {
            std::fill(used.begin(), used.end(), false);
            for (int c : image) {
                if (used[c])
                    return true;
                used[c] = true;
            }
            found.emplace(Hom{b.size(), std::vector<int>(image.begin(), image.end())});
            return false;
        });
        return found;
    }

    namespace
    {
        // An endomorphism missing vertex v, if any.
        // A maximum clique must land injectively on a clique of g - v, so when every
        // maximum clique uses v there is nothing to search for.
        auto avoiding_endomorphism(const Graph & g, int v, std::uint64_t node_cap, int omega = -1) -> std::optional<std::vector<int>>
        {
            if (omega > 0) {
                std::vector<int> rest;
                for (int u = 0 ; u < g.size() ; ++u)
                    if (u != v)
                        rest.push_back(u);
                if (clique_number(g.induced(rest)) < omega)
                    return std::nullopt;
            }
            HomSearch search(g, g);
            search.set_node_cap(node_cap);
            Bitset allowed(static_cast<std::size_t>(g.size()), true);
            allowed.reset(static_cast<std::size_t>(v));
            for (int u = 0 ; u < g.size() ; ++u)
                search.restrict(u, allowed);
            return search.first();
        }
    }

    auto is_core(const Graph & g, std::uint64_t node_cap) -> bool
    {
        int omega = g.has_loops() ? -1 : clique_number(g);
        for (int v = 0 ; v < g.size() ; ++v)
            if (avoiding_endomorphism(g, v, node_cap, omega))
                return false;
        return true;
    }

    auto core_of(const Graph & g, std::uint64_t node_cap) -> CoreResult
    {
        auto stiff = stiff_reduction(g);
        Graph current = stiff.terminal;
        std::vector<int> vertices = stiff.terminal_vertices;

        // t maps the input into `current`, in current labels
        std::vector<int> t = stiff.retraction.image;

        bool shrunk = true;
        while (shrunk) {
            shrunk = false;
            int omega = current.has_loops() ? -1 : clique_number(current);
            for (int v = 0 ; v < current.size() && ! shrunk ; ++v) {
                auto e = avoiding_endomorphism(current, v, node_cap, omega);
                if (! e)
                    continue;
                std::vector<int> image = *e;
                std::sort(image.begin(), image.end());
                image.erase(std::unique(image.begin(), image.end()), image.end());
                std::vector<int> index(static_cast<std::size_t>(current.size()), -1);
                for (std::size_t i = 0 ; i < image.size() ; ++i)
                    index[image[i]] = static_cast<int>(i);

                for (auto & x : t)
                    x = index[(*e)[x]];
                std::vector<int> next_vertices;
                for (int w : image)
                    next_vertices.push_back(vertices[w]);
                current = current.induced(image);
                vertices = std::move(next_vertices);
                shrunk = true;
            }
        }

        // t restricted to the core is an automorphism sigma; undo it
        std::vector<int> sigma_inverse(static_cast<std::size_t>(current.size()));
        for (int i = 0 ; i < current.size() ; ++i)
            sigma_inverse[t[vertices[i]]] = i;
        for (auto & x : t)
            x = sigma_inverse[x];

        CoreResult result{current, vertices, Hom{current.size(), std::move(t)}};
        if (! is_hom(g, result.core, result.retraction))
            throw std::logic_error("core retraction is not a homomorphism");
        return result;
    }

    auto self_mixing(const Graph & g, std::uint64_t cap) -> SelfMixing
    {
        auto dismantlable = is_dismantlable(g).dismantlable;
        auto kind = g.has_loops() ? GraphKind::homomorphism : GraphKind::colour;
        try {
            auto report = components(g, g, kind, cap);
            bool connected = report.class_count() == 1;
            if (connected != dismantlable)
                throw std::logic_error("dismantlability and " + to_string(kind) + " graph connectivity disagree");
            return SelfMixing{connected, "dismantlable+components"};
        }
        catch (const CapExceeded &) {
            return SelfMixing{dismantlable, "dismantlable"};
        }
    }
}
