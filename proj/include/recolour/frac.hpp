#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace recolour
{
    /// A rational k/q with positive parts. Raw pairs are kept as given, so
    /// (kd, qd) stays distinct from (k, q); call reduced() to normalise.
    struct Frac
    {
        std::int64_t k = 0;
        std::int64_t q = 1;

        auto reduced() const -> Frac;
        auto is_reduced() const -> bool;
        auto to_string() const -> std::string;

        /// Exact value comparison by cross-multiplication.
        friend auto operator<=>(const Frac & a, const Frac & b) -> std::strong_ordering
        {
            auto lhs = static_cast<__int128>(a.k) * b.q;
            auto rhs = static_cast<__int128>(b.k) * a.q;
            return lhs <=> rhs;
        }

        /// Value equality; use same_pair() to compare raw (k, q).
        friend auto operator==(const Frac & a, const Frac & b) -> bool
        {
            return (a <=> b) == std::strong_ordering::equal;
        }

        auto same_pair(const Frac & other) const -> bool { return k == other.k && q == other.q; }
    };

    auto make_frac(std::int64_t k, std::int64_t q) -> Frac;

    /// Parses "k/q" or a bare integer "k" (q = 1).
    auto parse_frac(std::string_view text) -> Frac;

    auto add(const Frac & a, const Frac & b) -> Frac;
    auto ceil_div(std::int64_t a, std::int64_t b) -> std::int64_t;
}
