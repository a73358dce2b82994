#include <recolour/hom.hpp>
#include <recolour/errors.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace recolour
{
    auto is_hom(const Graph & g, const Graph & h, std::span<const int> image) -> bool
    {
        if (static_cast<int>(image.size()) != g.size())
            throw std::invalid_argument("image length " + std::to_string(image.size()) + " does not match source size " + std::to_string(g.size()));
        for (int c : image)
            if (c < 0 || c >= h.size())
                throw std::invalid_argument("image entry " + std::to_string(c) + " out of range");
        for (auto [u, v] : g.edges())
            if (! h.adjacent(image[u], image[v]))
                return false;
        return true;
    }

    auto is_hom(const Graph & g, const Graph & h, const Hom & f) -> bool
    {
        if (f.target_n != h.size())
            throw std::invalid_argument("hom target size does not match");
        return is_hom(g, h, std::span<const int>(f.image));
    }

    auto compose(const Hom & f, const Hom & g) -> Hom
    {
        if (f.target_n != g.source_n())
            throw std::invalid_argument("cannot compose: target of first map is not the source of the second");
        Hom result{g.target_n, {}};
        result.image.reserve(f.image.size());
        for (int x : f.image)
            result.image.push_back(g.image[x]);
        return result;
    }

    auto identity_hom(const Graph & g) -> Hom
    {
        Hom result{g.size(), std::vector<int>(static_cast<std::size_t>(g.size()))};
        std::iota(result.image.begin(), result.image.end(), 0);
        return result;
    }

    auto is_surjective(const Hom & f) -> bool
    {
        std::vector<bool> hit(static_cast<std::size_t>(f.target_n), false);
        int count = 0;
        for (int c : f.image)
            if (! hit[c]) {
                hit[c] = true;
                ++count;
            }
        return count == f.target_n;
    }

    HomSearch::HomSearch(const Graph & g, const Graph & h) :
        g_(g),
        h_(h)
    {
        auto loops = h.loop_set();
        for (int v = 0 ; v < g.size() ; ++v) {
            if (g.has_loop(v))
                initial_.push_back(loops);
            else
                initial_.emplace_back(static_cast<std::size_t>(h.size()), true);
        }
    }

    void HomSearch::restrict(int v, const Bitset & allowed)
    {
        if (allowed.size() != static_cast<std::size_t>(h_.size()))
            throw std::invalid_argument("list size does not match target");
        initial_.at(v) &= allowed;
    }

    void HomSearch::pin(int v, int c)
    {
        if (c < 0 || c >= h_.size())
            throw std::invalid_argument("pinned colour out of range");
        bool allowed = initial_.at(v).test(static_cast<std::size_t>(c));
        initial_[v] = Bitset(static_cast<std::size_t>(h_.size()));
        if (allowed)
            initial_[v].set(static_cast<std::size_t>(c));
    }

    auto HomSearch::order() const -> std::vector<int>
    {
        int n = g_.size();
        std::vector<int> result;
        std::vector<bool> placed(static_cast<std::size_t>(n), false);

        // singleton domains first, so pins prune from the start
        for (int v = 0 ; v < n ; ++v)
            if (initial_[v].count() <= 1) {
                result.push_back(v);
                placed[v] = true;
            }

        if (natural_order_) {
            for (int v = 0 ; v < n ; ++v)
                if (! placed[v])
                    result.push_back(v);
            return result;
        }

        while (static_cast<int>(result.size()) < n) {
            int root = -1;
            for (int v = 0 ; v < n ; ++v)
                if (! placed[v] && (root == -1 || g_.degree(v) > g_.degree(root)))
                    root = v;
            std::size_t head = result.size();
            result.push_back(root);
            placed[root] = true;
            while (head < result.size()) {
                int u = result[head++];
                for (int w : g_.neighbours(u))
                    if (! placed[w]) {
                        placed[w] = true;
                        result.push_back(w);
                    }
            }
        }
        return result;
    }

    auto HomSearch::first_vertex() -> int
    {
        auto o = order();
        return o.empty() ? -1 : o.front();
    }

    namespace
    {
        struct SearchState
        {
            std::size_t words;
            std::vector<int> order;
            std::vector<std::vector<int>> later;
            std::vector<std::uint64_t> domains;
            std::vector<std::uint64_t> trail;
            std::vector<int> trail_vertices;
            std::vector<int> assignment;
            const Graph & h;
            std::uint64_t node_cap;
            std::uint64_t & nodes;
            const std::function<bool (std::span<const int>)> & visit;

            auto domain(int v) -> std::uint64_t * { return domains.data() + static_cast<std::size_t>(v) * words; }

            auto search(std::size_t depth) -> bool
            {
                if (depth == order.size())
                    return visit(assignment);

                int v = order[depth];
                for (std::size_t wi = 0 ; wi < words ; ++wi) {
                    std::uint64_t bits = domain(v)[wi];
                    while (bits) {
                        int c = static_cast<int>(wi * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
                        bits &= bits - 1;

                        if (node_cap && ++nodes > node_cap)
                            throw CapExceeded(node_cap);
                        else if (! node_cap)
                            ++nodes;

                        assignment[v] = c;
                        std::size_t mark = trail_vertices.size();
                        bool ok = true;
                        auto & nc = h.row(c).words();
                        for (int u : later[depth]) {
                            auto * d = domain(u);
                            trail_vertices.push_back(u);
                            trail.insert(trail.end(), d, d + words);
                            std::uint64_t any = 0;
                            for (std::size_t k = 0 ; k < words ; ++k) {
                                d[k] &= nc[k];
                                any |= d[k];
                            }
                            if (! any) {
                                ok = false;
                                break;
                            }
                        }

                        bool keep_going = true;
                        if (ok)
                            keep_going = search(depth + 1);

                        while (trail_vertices.size() > mark) {
                            auto * d = domain(trail_vertices.back());
                            std::copy(trail.end() - static_cast<std::ptrdiff_t>(words), trail.end(), d);
                            trail.resize(trail.size() - words);
                            trail_vertices.pop_back();
                        }

                        if (! keep_going)
                            return false;
                    }
                }
                return true;
            }
        };
    }

    auto HomSearch::run(const std::function<bool (std::span<const int>)> & visit) -> bool
    {
        int n = g_.size();
        nodes_ = 0;
        if (n == 0)
            return visit({});
        if (h_.size() == 0)
            return true;

        std::size_t words = initial_[0].word_count();
        SearchState state{words, order(), {}, {}, {}, {}, std::vector<int>(static_cast<std::size_t>(n), -1),
            h_, node_cap_, nodes_, visit};

        std::vector<int> pos(static_cast<std::size_t>(n));
        for (int i = 0 ; i < n ; ++i)
            pos[state.order[i]] = i;
        state.later.resize(static_cast<std::size_t>(n));
        for (int i = 0 ; i < n ; ++i)
            for (int u : g_.neighbours(state.order[i]))
                if (pos[u] > i)
                    state.later[i].push_back(u);

        state.domains.resize(static_cast<std::size_t>(n) * words);
        for (int v = 0 ; v < n ; ++v) {
            if (! initial_[v].any())
                return true;
            std::copy(initial_[v].words().begin(), initial_[v].words().end(), state.domain(v));
        }

        return state.search(0);
    }

    auto HomSearch::first() -> std::optional<std::vector<int>>
    {
        std::optional<std::vector<int>> result;
        run([&] (std::span<const int> image) {
            result.emplace(image.begin(), image.end());
            return false;
        });
        return result;
    }

    namespace
    {
        // Images become base-t integers when t^n fits in 63 bits.
        auto codes_fit(int source_n, int target_n) -> bool
        {
            unsigned __int128 value = 1;
            for (int i = 0 ; i < source_n ; ++i) {
                value *= static_cast<unsigned>(target_n);
                if (value > (static_cast<unsigned __int128>(1) << 63))
                    return false;
            }
            return true;
        }

        auto encode(std::span<const int> image, int target_n) -> std::uint64_t
        {
            std::uint64_t code = 0;
            for (int c : image)
                code = code * static_cast<std::uint64_t>(target_n) + static_cast<std::uint64_t>(c);
            return code;
        }

        void decode(std::uint64_t code, int target_n, std::span<int> out)
        {
            for (std::size_t i = out.size() ; i-- > 0 ; ) {
                out[i] = static_cast<int>(code % static_cast<std::uint64_t>(target_n));
                code /= static_cast<std::uint64_t>(target_n);
            }
        }

        std::atomic<int> configured_threads{1};
    }

    HomSpace::HomSpace(int source_n, int target_n, std::vector<int> images) :
        source_n_(source_n),
        target_n_(target_n),
        images_(std::move(images))
    {
        count_ = source_n_ == 0 ? (images_.empty() ? 0 : 1) : images_.size() / static_cast<std::size_t>(source_n_);
        if (source_n_ > 0 && target_n_ > 0 && codes_fit(source_n_, target_n_)) {
            codes_.reserve(count_);
            for (std::size_t i = 0 ; i < count_ ; ++i)
                codes_.push_back(encode((*this)[i], target_n_));

            // direct lookup when the code range is small
            std::uint64_t range = 1;
            for (int i = 0 ; i < source_n_ ; ++i)
                range *= static_cast<std::uint64_t>(target_n_);
            if (range <= (std::uint64_t{1} << 22) && count_ < (std::uint64_t{1} << 31)) {
                table_.assign(range, -1);
                for (std::size_t i = 0 ; i < count_ ; ++i)
                    table_[codes_[i]] = static_cast<std::int32_t>(i);
            }
        }
    }

    auto HomSpace::index_of_code(std::uint64_t code) const -> std::optional<std::size_t>
    {
        if (! table_.empty()) {
            if (code < table_.size() && table_[code] != -1)
                return static_cast<std::size_t>(table_[code]);
            return std::nullopt;
        }
        auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
        if (it != codes_.end() && *it == code)
            return static_cast<std::size_t>(it - codes_.begin());
        return std::nullopt;
    }

    auto HomSpace::hom(std::size_t i) const -> Hom
    {
        auto s = (*this)[i];
        return Hom{target_n_, std::vector<int>(s.begin(), s.end())};
    }

    auto HomSpace::index_of(std::span<const int> image) const -> std::optional<std::size_t>
    {
        if (static_cast<int>(image.size()) != source_n_)
            return std::nullopt;
        if (source_n_ == 0)
            return count_ ? std::optional<std::size_t>{0} : std::nullopt;

        if (! codes_.empty() || count_ == 0) {
            if (count_ == 0)
                return std::nullopt;
            for (int c : image)
                if (c < 0 || c >= target_n_)
                    return std::nullopt;
            return index_of_code(encode(image, target_n_));
        }

        std::size_t lo = 0, hi = count_;
        while (lo < hi) {
            std::size_t mid = lo + (hi - lo) / 2;
            auto m = (*this)[mid];
            if (std::lexicographical_compare(m.begin(), m.end(), image.begin(), image.end()))
                lo = mid + 1;
            else
                hi = mid;
        }
        if (lo < count_ && std::ranges::equal((*this)[lo], image))
            return lo;
        return std::nullopt;
    }

    auto search_threads() -> int
    {
        return configured_threads.load();
    }

    void set_search_threads(int threads)
    {
        if (threads < 1)
            throw std::invalid_argument("thread count must be positive");
        configured_threads.store(threads);
    }

    auto enumerate_homs(const Graph & g, const Graph & h, std::uint64_t cap) -> HomSpace
    {
        int n = g.size();
        if (n == 0)
            return HomSpace(0, h.size(), {0});

        std::atomic<std::uint64_t> found{0};
        auto collect_into = [&] (std::vector<int> & out) {
            return [&] (std::span<const int> image) {
                if (found.fetch_add(1) + 1 > cap)
                    throw CapExceeded(cap);
                out.insert(out.end(), image.begin(), image.end());
                return true;
            };
        };

        std::vector<int> flat;
        int threads = search_threads();
        HomSearch probe(g, h);
        int root = probe.first_vertex();

        if (threads <= 1 || h.size() < 2) {
            probe.run(collect_into(flat));
        }
        else {
            // one task per colour of the first branching vertex
            std::vector<std::vector<int>> parts(static_cast<std::size_t>(h.size()));
            std::atomic<int> next_colour{0};
            std::exception_ptr failure;
            std::mutex failure_mutex;
            std::atomic<bool> stop{false};

            auto worker = [&] {
                while (! stop.load()) {
                    int c = next_colour.fetch_add(1);
                    if (c >= h.size())
                        return;
                    try {
                        HomSearch search(g, h);
                        search.pin(root, c);
                        search.run(collect_into(parts[c]));
                    }
                    catch (...) {
                        std::lock_guard<std::mutex> lock(failure_mutex);
                        if (! failure)
                            failure = std::current_exception();
                        stop.store(true);
                    }
                }
            };

            std::vector<std::thread> pool;
            for (int t = 0 ; t < std::min(threads, h.size()) ; ++t)
                pool.emplace_back(worker);
            for (auto & t : pool)
                t.join();
            if (failure)
                std::rethrow_exception(failure);
            for (auto & p : parts)
                flat.insert(flat.end(), p.begin(), p.end());
        }

        std::size_t count = flat.size() / static_cast<std::size_t>(n);
        if (codes_fit(n, h.size())) {
            std::vector<std::uint64_t> codes(count);
            for (std::size_t i = 0 ; i < count ; ++i)
                codes[i] = encode({flat.data() + i * static_cast<std::size_t>(n), static_cast<std::size_t>(n)}, h.size());
            std::sort(codes.begin(), codes.end());
            for (std::size_t i = 0 ; i < count ; ++i)
                decode(codes[i], h.size(), {flat.data() + i * static_cast<std::size_t>(n), static_cast<std::size_t>(n)});
        }
        else {
            std::vector<std::size_t> perm(count);
            std::iota(perm.begin(), perm.end(), 0);
            auto row = [&] (std::size_t i) { return std::span<const int>(flat.data() + i * static_cast<std::size_t>(n), static_cast<std::size_t>(n)); };
            std::sort(perm.begin(), perm.end(), [&] (std::size_t a, std::size_t b) {
                auto ra = row(a), rb = row(b);
                return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
            });
            std::vector<int> sorted;
            sorted.reserve(flat.size());
            for (auto i : perm)
                sorted.insert(sorted.end(), row(i).begin(), row(i).end());
            flat = std::move(sorted);
        }

        return HomSpace(n, h.size(), std::move(flat));
    }

    auto hom_exists(const Graph & g, const Graph & h) -> bool
    {
        return find_hom(g, h).has_value();
    }

    auto find_hom(const Graph & g, const Graph & h) -> std::optional<Hom>
    {
        auto image = HomSearch(g, h).first();
        if (! image)
            return std::nullopt;
        return Hom{h.size(), std::move(*image)};
    }
}
