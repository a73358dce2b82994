#include <recolour/circular.hpp>
#include <recolour/errors.hpp>
#include <recolour/generators.hpp>
#include <recolour/parameters.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace recolour
{
    namespace
    {
        // x with a * x = 1 mod m, for gcd(a, m) = 1 and m >= 1
        auto inverse_mod(std::int64_t a, std::int64_t m) -> std::int64_t
        {
            std::int64_t old_r = a % m, r = m, old_s = 1, s = 0;
            while (r != 0) {
                auto quotient = old_r / r;
                std::tie(old_r, r) = std::make_pair(r, old_r - quotient * r);
                std::tie(old_s, s) = std::make_pair(s, old_s - quotient * s);
            }
            return ((old_s % m) + m) % m;
        }

        void check_circular(std::int64_t k, std::int64_t q)
        {
            if (q < 1 || k < 2 * q)
                throw std::invalid_argument("need k >= 2q >= 2, got " + std::to_string(k) + "/" + std::to_string(q));
        }

        void check_coprime(std::int64_t k, std::int64_t q)
        {
            check_circular(k, q);
            if (std::gcd(k, q) != 1)
                throw std::invalid_argument("need gcd(k, q) = 1, got " + std::to_string(k) + "/" + std::to_string(q));
        }
    }

    auto lower_parent(std::int64_t k, std::int64_t q) -> LowerParent
    {
        check_coprime(k, q);
        std::int64_t qp = q == 1 ? 1 : inverse_mod(k, q);
        if (qp == 0)
            qp = q;
        std::int64_t kp = (k * qp - 1) / q;
        if (k * qp - kp * q != 1 || qp < 1 || qp > q)
            throw std::logic_error("lower parent computation failed");
        return LowerParent{k, q, kp, qp};
    }

    auto lower_parent_bound(std::int64_t k, std::int64_t q, std::int64_t j, std::int64_t p) -> LowerParentBound
    {
        if (j < 1 || p < 1)
            throw std::invalid_argument("j and p must be positive");
        if (! (Frac{k, q} > Frac{j, p}))
            throw std::invalid_argument("need k/q > j/p");

        LowerParentBound result;
        result.parent = lower_parent(k, q);
        auto qp = result.parent.parent_q;
        result.bound = Frac{j * q * qp + qp - p, p * q * qp}.reduced();
        result.holds = Frac{result.parent.parent_k, qp} >= result.bound;
        result.equal_denominators = qp == p;
        result.strict = qp > p;
        return result;
    }

    auto is_cyclic_interval(const std::vector<int> & sorted_colours, int k) -> bool
    {
        auto n = sorted_colours.size();
        if (n <= 1 || n == static_cast<std::size_t>(k))
            return true;
        std::vector<bool> present(static_cast<std::size_t>(k), false);
        for (int c : sorted_colours)
            present[c] = true;
        int run_starts = 0;
        for (int c : sorted_colours)
            if (! present[(c + k - 1) % k])
                ++run_starts;
        return run_starts == 1;
    }

    auto available_colours(const Graph & g, std::span<const int> f, int v, int k, int q) -> AvailableColours
    {
        check_circular(k, q);
        std::vector<bool> blocked(static_cast<std::size_t>(k), false);
        for (int u : g.neighbours(v)) {
            if (u == v)
                continue;
            for (int t = -(q - 1) ; t <= q - 1 ; ++t)
                blocked[((f[u] + t) % k + k) % k] = true;
        }
        AvailableColours result;
        for (int c = 0 ; c < k ; ++c)
            if (! blocked[c])
                result.colours.push_back(c);
        result.interval = is_cyclic_interval(result.colours, k);
        return result;
    }

    auto is_flexible(const Graph & g, int k, int q, std::uint64_t cap) -> Flexibility
    {
        if (g.has_loops())
            throw std::invalid_argument("flexibility is computed for loop-free graphs only");
        auto report = components(g, circular_clique(k, q), GraphKind::colour, cap);
        if (report.total == 0)
            throw NoColourings();
        Flexibility result{true, std::nullopt};
        for (auto & cls : report.classes)
            if (! cls.non_surjective) {
                result.flexible = false;
                result.witness = cls.rep;
                break;
            }
        return result;
    }

    auto avoid_colour_normalize(const Graph & g, const Hom & f, int k, int q) -> std::vector<Hom>
    {
        check_coprime(k, q);
        auto h = circular_clique(k, q);
        if (! is_hom(g, h, f))
            throw std::invalid_argument("not a (k, q)-colouring");

        std::vector<bool> used(static_cast<std::size_t>(k), false);
        for (int c : f.image)
            used[c] = true;
        auto missing = std::find(used.begin(), used.end(), false);
        if (missing == used.end())
            throw std::invalid_argument("colouring is surjective");

        std::vector<Hom> walk;
        int i = static_cast<int>(missing - used.begin());
        Hom current = f;
        while (i != 0 && std::ranges::find(current.image, 0) != current.image.end()) {
            int from = (i + q) % k, to = (i + q - 1) % k;
            for (int v = 0 ; v < g.size() ; ++v)
                if (current.image[v] == from) {
                    current.image[v] = to;
                    if (! is_hom(g, h, current))
                        throw std::logic_error("normalisation step produced an invalid colouring");
                    walk.push_back(current);
                }
            i = from;
        }
        return walk;
    }

    auto scale_retraction(int k, int q, int d) -> ScaleRetraction
    {
        check_coprime(k, q);
        if (d < 1)
            throw std::invalid_argument("d must be positive");
        ScaleRetraction result{Hom{k, {}}, Hom{k * d, {}}};
        for (int u = 0 ; u < k * d ; ++u)
            result.retraction.image.push_back(u / d);
        for (int u = 0 ; u < k ; ++u)
            result.section.image.push_back(d * u);
        if (! is_retraction(circular_clique(k * d, q * d), circular_clique(k, q), result.retraction, result.section))
            throw std::logic_error("floor map is not a retraction");
        return result;
    }

    auto delete_vertex_dismantle(int k, int q, int d, int i) -> VertexDeletion
    {
        check_coprime(k, q);
        if (d < 1)
            throw std::invalid_argument("d must be positive");
        int n = k * d;
        if (i < 0 || i >= n)
            throw std::invalid_argument("vertex out of range");

        VertexDeletion result;
        auto whole = circular_clique(n, q * d);
        result.start = whole.without_vertex(i);

        if (d == 1) {
            auto parent = lower_parent(k, q);
            if (parent.parent_k < 2 * parent.parent_q)
                throw std::invalid_argument("lower parent is not a circular clique");
            result.target_k = static_cast<int>(parent.parent_k);
            result.target_q = static_cast<int>(parent.parent_q);

            auto reduction = stiff_reduction(result.start);
            result.steps = reduction.steps;
            result.residual = reduction.terminal;
            for (int w : reduction.terminal_vertices)
                result.residual_vertices.push_back(w < i ? w : w + 1);
            auto iso = find_isomorphism(result.residual, circular_clique(result.target_k, result.target_q));
            if (! iso)
                throw std::logic_error("stiff reduction did not reach the lower parent");
            result.isomorphism = *iso;
            return result;
        }

        result.target_k = k * (d - 1);
        result.target_q = q * (d - 1);

        Graph current = result.start;
        std::vector<int> original;
        for (int w = 0 ; w < n ; ++w)
            if (w != i)
                original.push_back(w);

        int step_size = d * q;
        for (int j = 1 ; j < k ; ++j) {
            int v = (i + j * step_size) % n, u = (v + n - 1) % n;
            auto label = [&] (int w) {
                return static_cast<int>(std::ranges::find(original, w) - original.begin());
            };
            auto [next, step] = apply_fold(current, label(v), label(u));
            original.erase(original.begin() + label(v));
            result.steps.push_back(std::move(step));
            current = std::move(next);
        }

        result.residual = current;
        result.residual_vertices = original;
        result.isomorphism = Hom{result.target_k, {}};
        for (int w : original) {
            int shifted = (w - i + n) % n;
            int a = shifted / d, b = shifted % d;
            if (b == 0)
                throw std::logic_error("a removed vertex survived the fold chain");
            result.isomorphism.image.push_back(a * (d - 1) + (b - 1));
        }

        auto target = circular_clique(result.target_k, result.target_q);
        auto sorted = result.isomorphism.image;
        std::sort(sorted.begin(), sorted.end());
        bool bijective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()
            && static_cast<int>(sorted.size()) == target.size();
        if (! bijective || ! is_hom(result.residual, target, result.isomorphism)
                || result.residual.edge_count() != target.edge_count())
            throw std::logic_error("residual graph is not the expected circular clique");
        return result;
    }

    auto to_string(ScanVerdict verdict) -> std::string
    {
        switch (verdict) {
            case ScanVerdict::mixing: return "Mixing";
            case ScanVerdict::not_mixing: return "NotMixing";
            case ScanVerdict::no_colourings: return "NoColourings";
            case ScanVerdict::skipped: return "Skipped";
        }
        return "?";
    }

    auto mixing_scan(const Graph & g, const std::vector<Frac> & fracs, std::uint64_t cap) -> MixingScan
    {
        if (g.has_loops())
            throw std::invalid_argument("scans need a loop-free graph");

        MixingScan scan;
        for (auto & f : fracs) {
            check_circular(f.k, f.q);
            MixingScanRow row{f, ScanVerdict::skipped, 0, 0, std::nullopt};
            try {
                auto result = is_mixing(g, circular_clique(static_cast<int>(f.k), static_cast<int>(f.q)), cap);
                row.verdict = result.verdict == Verdict::mixing ? ScanVerdict::mixing
                    : result.verdict == Verdict::not_mixing ? ScanVerdict::not_mixing : ScanVerdict::no_colourings;
                row.hom_count = result.total;
                row.class_count = result.verdict == Verdict::no_colourings ? 0 : result.classes;
                row.witness = result.witness;
            }
            catch (const CapExceeded &) {
                row.verdict = ScanVerdict::skipped;
            }
            scan.rows.push_back(std::move(row));
        }

        int n = g.size();
        if (n == 0)
            return scan;

        auto col = colouring_number(g).value;
        auto delta = degrees(g).max;
        bool has_edge = g.edge_count() > 0;

        scan.bounds.push_back({"M_c", "<=", Frac{2 * col, 1}, "twice the colouring number"});
        if (has_edge)
            scan.bounds.push_back({"M_c", "<=", Frac{2 * delta, 1}, "twice the maximum degree"});
        scan.bounds.push_back({"M", "<=", Frac{col + 1, 1}, "colouring number plus one"});
        scan.bounds.push_back({"M_c", "<=", std::max(Frac{n + 1, 2}, Frac{col + 1, 1}).reduced(),
                "max{(|V|+1)/2, M} with M <= col+1"});
        if (! is_bipartite(g)) {
            auto omega = clique_number(g);
            scan.bounds.push_back({"m_c", ">=", Frac{std::max(4, omega + 1), 1}, "max{4, clique number + 1}, non-bipartite"});
        }
        if (n <= 12)
            scan.bounds.push_back({"m_c", ">=", circular_chromatic_number(g, n), "circular chromatic number"});

        std::optional<Frac> largest_not_mixing, smallest_mixing;
        for (auto & row : scan.rows) {
            if (row.verdict == ScanVerdict::not_mixing && (! largest_not_mixing || row.frac > *largest_not_mixing))
                largest_not_mixing = row.frac;
            if (row.verdict == ScanVerdict::mixing && (! smallest_mixing || row.frac < *smallest_mixing))
                smallest_mixing = row.frac;
        }
        if (largest_not_mixing)
            scan.bounds.push_back({"M_c", ">=", *largest_not_mixing, "scan: largest NotMixing row"});
        if (smallest_mixing)
            scan.bounds.push_back({"m_c", "<=", *smallest_mixing, "scan: smallest Mixing row"});
        return scan;
    }
}
