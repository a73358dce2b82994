#include <recolour/hom_graph.hpp>
#include <recolour/errors.hpp>

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace recolour
{
    auto to_string(GraphKind kind) -> std::string
    {
        return kind == GraphKind::colour ? "colour" : "homomorphism";
    }

    auto to_string(Verdict verdict) -> std::string
    {
        switch (verdict) {
            case Verdict::mixing: return "Mixing";
            case Verdict::not_mixing: return "NotMixing";
            case Verdict::no_colourings: return "NoColourings";
        }
        return "?";
    }

    namespace
    {
        void check_shapes(const Hom & f, const Hom & g)
        {
            if (f.source_n() != g.source_n() || f.target_n != g.target_n)
                throw std::invalid_argument("homomorphisms have different shapes");
        }
    }

    auto colour_adjacent(const Hom & f, const Hom & g) -> bool
    {
        check_shapes(f, g);
        int differences = 0;
        for (int v = 0 ; v < f.source_n() ; ++v)
            if (f.image[v] != g.image[v])
                ++differences;
        return differences == 1;
    }

    auto hom_adjacent(const Graph & g, const Graph & h, std::span<const int> f1, std::span<const int> f2) -> bool
    {
        if (static_cast<int>(f1.size()) != g.size() || static_cast<int>(f2.size()) != g.size())
            throw std::invalid_argument("homomorphisms have different shapes");
        for (auto [u, v] : g.edges())
            if (! h.adjacent(f1[u], f2[v]) || ! h.adjacent(f1[v], f2[u]))
                return false;
        return true;
    }

    auto hom_adjacent(const Graph & g, const Graph & h, const Hom & f1, const Hom & f2) -> bool
    {
        check_shapes(f1, f2);
        return hom_adjacent(g, h, std::span<const int>(f1.image), std::span<const int>(f2.image));
    }

    auto recolour_options(const Graph & g, const Graph & h, std::span<const int> f, int v) -> Bitset
    {
        Bitset options(static_cast<std::size_t>(h.size()), true);
        for (int u : g.neighbours(v))
            if (u != v)
                options &= h.row(f[u]);
        if (g.has_loop(v))
            options &= h.loop_set();
        return options;
    }

    namespace
    {
        // Recolouring options without per-call allocation.
        class Recolourer
        {
        public:
            Recolourer(const Graph & g, const Graph & h) :
                h_(h),
                loops_(h.loop_set()),
                options_(static_cast<std::size_t>(h.size()))
            {
                for (int v = 0 ; v < g.size() ; ++v) {
                    auto n = g.neighbours(v);
                    std::erase(n, v);
                    neighbours_.push_back(std::move(n));
                    looped_.push_back(g.has_loop(v));
                }
            }

            template <typename Visit>
            void run(std::span<const int> f, Visit && visit)
            {
                auto & words = options_.words();
                for (std::size_t v = 0 ; v < neighbours_.size() ; ++v) {
                    std::fill(words.begin(), words.end(), ~std::uint64_t{0});
                    if (h_.size() % 64)
                        words.back() &= (std::uint64_t{1} << (h_.size() % 64)) - 1;
                    for (int u : neighbours_[v])
                        options_ &= h_.row(f[u]);
                    if (looped_[v])
                        options_ &= loops_;
                    options_.reset(static_cast<std::size_t>(f[v]));
                    for (auto c = options_.first() ; c < options_.size() ; c = options_.next(c + 1))
                        visit(static_cast<int>(v), static_cast<int>(c));
                }
            }

        private:
            const Graph & h_;
            Bitset loops_;
            Bitset options_;
            std::vector<std::vector<int>> neighbours_;
            std::vector<bool> looped_;
        };

        auto surjective(std::span<const int> image, int target_n) -> bool
        {
            std::vector<bool> hit(static_cast<std::size_t>(target_n), false);
            int count = 0;
            for (int c : image)
                if (! hit[c]) {
                    hit[c] = true;
                    ++count;
                }
            return count == target_n;
        }
    }

    void for_each_recolouring(const Graph & g, const Graph & h, std::span<const int> f,
            const std::function<void (int, int)> & visit)
    {
        Recolourer(g, h).run(f, visit);
    }

    auto recolour_neighbours(const Graph & g, const Graph & h, const Hom & f) -> std::vector<Hom>
    {
        std::vector<Hom> result;
        for_each_recolouring(g, h, f.image, [&] (int v, int c) {
            Hom next = f;
            next.image[v] = c;
            result.push_back(std::move(next));
        });
        return result;
    }

    void for_each_hom_neighbour(const Graph & g, const Graph & h, std::span<const int> f,
            const std::function<void (std::span<const int>)> & visit)
    {
        HomSearch search(g, h);
        search.use_natural_order();
        for (int v = 0 ; v < g.size() ; ++v) {
            Bitset allowed(static_cast<std::size_t>(h.size()), true);
            for (int u : g.neighbours(v))
                allowed &= h.row(f[u]);
            search.restrict(v, allowed);
        }
        search.run([&] (std::span<const int> image) {
            visit(image);
            return true;
        });
    }

    auto components(const Graph & g, const Graph & h, GraphKind kind, std::uint64_t cap) -> ComponentReport
    {
        return components(g, h, kind, enumerate_homs(g, h, cap));
    }

    auto components(const Graph & g, const Graph & h, GraphKind kind, HomSpace space) -> ComponentReport
    {
        ComponentReport report;
        report.kind = kind;
        report.total = space.size();
        report.class_of.assign(space.size(), -1);

        std::vector<int> buffer(static_cast<std::size_t>(g.size()));
        std::vector<std::size_t> queue;
        Recolourer recolourer(g, h);
        std::vector<std::uint64_t> place(static_cast<std::size_t>(g.size()));
        if (space.has_codes()) {
            std::uint64_t p = 1;
            for (int v = g.size() ; v-- > 0 ; ) {
                place[v] = p;
                p *= static_cast<std::uint64_t>(h.size());
            }
        }
        for (std::size_t start = 0 ; start < space.size() ; ++start) {
            if (report.class_of[start] != -1)
                continue;
            int id = static_cast<int>(report.classes.size());
            report.classes.push_back(ComponentClass{space.hom(start), 0, false, false});
            report.class_of[start] = id;
            queue.assign(1, start);

            for (std::size_t head = 0 ; head < queue.size() ; ++head) {
                std::size_t i = queue[head];
                auto current = space[i];
                auto reach = [&] (std::span<const int> image) {
                    auto j = space.index_of(image);
                    if (! j)
                        throw std::logic_error("neighbour missing from the enumerated space");
                    if (report.class_of[*j] == -1) {
                        report.class_of[*j] = id;
                        queue.push_back(*j);
                    }
                };

                if (kind == GraphKind::colour && space.has_codes()) {
                    auto base = space.code(i);
                    recolourer.run(current, [&] (int v, int c) {
                        auto delta = place[v] * static_cast<std::uint64_t>(c) - place[v] * static_cast<std::uint64_t>(current[v]);
                        auto j = space.index_of_code(base + delta);
                        if (! j)
                            throw std::logic_error("neighbour missing from the enumerated space");
                        if (report.class_of[*j] == -1) {
                            report.class_of[*j] = id;
                            queue.push_back(*j);
                        }
                    });
                }
                else if (kind == GraphKind::colour) {
                    std::copy(current.begin(), current.end(), buffer.begin());
                    recolourer.run(current, [&] (int v, int c) {
                        int old = buffer[v];
                        buffer[v] = c;
                        reach(buffer);
                        buffer[v] = old;
                    });
                }
                else
                    for_each_hom_neighbour(g, h, current, reach);
            }

            auto & cls = report.classes.back();
            cls.size = queue.size();
            bool frozen_by_size = kind == GraphKind::homomorphism || ! g.has_loops();
            for (auto i : queue) {
                if (! cls.non_surjective && ! surjective(space[i], h.size()))
                    cls.non_surjective = true;
                if (! frozen_by_size && ! cls.frozen && is_hom_isolated(g, h, space[i]))
                    cls.frozen = true;
            }
            if (frozen_by_size)
                cls.frozen = cls.size == 1;
        }

        report.space = std::move(space);
        return report;
    }

    namespace
    {
        auto saturating_multiply(std::uint64_t a, std::uint64_t b) -> std::uint64_t
        {
            if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
                return std::numeric_limits<std::uint64_t>::max();
            return a * b;
        }
    }

    auto is_mixing(const Graph & g, const Graph & h, std::uint64_t cap) -> MixingResult
    {
        auto parts = g.components();
        std::vector<Graph> part_graphs;
        for (auto & part : parts)
            part_graphs.push_back(g.induced(part));

        MixingResult result;
        for (auto & pg : part_graphs)
            if (! hom_exists(pg, h))
                return result;

        result.total = 1;
        result.classes = 1;
        std::vector<int> least(static_cast<std::size_t>(g.size()));
        std::optional<std::pair<std::size_t, Hom>> second;
        for (std::size_t p = 0 ; p < parts.size() ; ++p) {
            auto report = components(part_graphs[p], h, GraphKind::colour, cap);
            result.total = saturating_multiply(result.total, report.total);
            result.classes = saturating_multiply(result.classes, report.class_count());
            auto & rep = report.classes.front().rep;
            for (std::size_t i = 0 ; i < parts[p].size() ; ++i)
                least[parts[p][i]] = rep.image[i];
            if (! second && report.class_count() > 1)
                second.emplace(p, report.classes[1].rep);
        }

        if (! second) {
            result.verdict = Verdict::mixing;
            return result;
        }

        result.verdict = Verdict::not_mixing;
        Hom first{h.size(), least};
        Hom other = first;
        auto & [p, rep] = *second;
        for (std::size_t i = 0 ; i < parts[p].size() ; ++i)
            other.image[parts[p][i]] = rep.image[i];
        result.witness.emplace(std::move(first), std::move(other));
        return result;
    }

    auto is_frozen(const Graph & g, const Graph & h, const Hom & f) -> bool
    {
        if (g.has_loops())
            throw std::invalid_argument("is_frozen needs a loop-free source; use homomorphism-graph components for looped graphs");
        if (! is_hom(g, h, f))
            throw std::invalid_argument("not a homomorphism");
        bool found = false;
        for_each_recolouring(g, h, f.image, [&] (int, int) { found = true; });
        return ! found;
    }

    auto is_hom_isolated(const Graph & g, const Graph & h, std::span<const int> f) -> bool
    {
        bool other = false;
        for_each_hom_neighbour(g, h, f, [&] (std::span<const int> image) {
            if (! std::ranges::equal(image, f))
                other = true;
        });
        return ! other;
    }

    namespace
    {
        auto hom_graph_adjacency(const Graph & g, const Graph & h, const HomSpace & space) -> std::vector<std::vector<std::size_t>>
        {
            std::vector<std::vector<std::size_t>> adjacency(space.size());
            for (std::size_t i = 0 ; i < space.size() ; ++i)
                for_each_hom_neighbour(g, h, space[i], [&] (std::span<const int> image) {
                    auto j = space.index_of(image);
                    if (! j)
                        throw std::logic_error("neighbour missing from the enumerated space");
                    if (*j != i)
                        adjacency[i].push_back(*j);
                });
            return adjacency;
        }

        auto bfs(const std::vector<std::vector<std::size_t>> & adjacency, std::size_t source) -> std::vector<int>
        {
            std::vector<int> dist(adjacency.size(), -1);
            std::deque<std::size_t> queue{source};
            dist[source] = 0;
            while (! queue.empty()) {
                auto u = queue.front();
                queue.pop_front();
                for (auto w : adjacency[u])
                    if (dist[w] == -1) {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
            }
            return dist;
        }
    }

    auto homotopy_path(const Graph & g, const Graph & h, const Hom & from, const Hom & to,
            std::uint64_t cap) -> std::optional<std::vector<Hom>>
    {
        if (! is_hom(g, h, from) || ! is_hom(g, h, to))
            throw std::invalid_argument("not a homomorphism");
        if (from == to)
            return std::vector<Hom>{from};

        auto space = enumerate_homs(g, h, cap);
        auto source = *space.index_of(from.image);
        auto target = *space.index_of(to.image);
        std::vector<std::size_t> parent(space.size(), space.size());
        std::deque<std::size_t> queue{source};
        parent[source] = source;
        while (! queue.empty() && parent[target] == space.size()) {
            auto u = queue.front();
            queue.pop_front();
            for_each_hom_neighbour(g, h, space[u], [&] (std::span<const int> image) {
                auto j = *space.index_of(image);
                if (parent[j] == space.size()) {
                    parent[j] = u;
                    queue.push_back(j);
                }
            });
        }
        if (parent[target] == space.size())
            return std::nullopt;

        std::vector<Hom> path;
        for (auto i = target ; ; i = parent[i]) {
            path.push_back(space.hom(i));
            if (i == source)
                break;
        }
        std::reverse(path.begin(), path.end());
        return path;
    }

    auto homotopy_distance(const Graph & g, const Graph & h, const Hom & from, const Hom & to,
            std::uint64_t cap) -> std::optional<int>
    {
        auto path = homotopy_path(g, h, from, to, cap);
        if (! path)
            return std::nullopt;
        return static_cast<int>(path->size()) - 1;
    }

    auto radius_centre(const Graph & g, const Graph & h, std::uint64_t cap) -> std::optional<RadiusCentre>
    {
        auto space = enumerate_homs(g, h, cap);
        if (space.empty())
            throw NoColourings();

        auto adjacency = hom_graph_adjacency(g, h, space);
        int best = -1;
        std::size_t centre = 0;
        for (std::size_t i = 0 ; i < space.size() ; ++i) {
            auto dist = bfs(adjacency, i);
            if (std::ranges::find(dist, -1) != dist.end())
                return std::nullopt;
            int ecc = *std::ranges::max_element(dist);
            if (best == -1 || ecc < best) {
                best = ecc;
                centre = i;
            }
        }
        return RadiusCentre{best, space.hom(centre)};
    }
}
