#include <recolour/frac.hpp>

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace recolour
{
    auto Frac::reduced() const -> Frac
    {
        auto g = std::gcd(k, q);
        return g ? Frac{k / g, q / g} : *this;
    }

    auto Frac::is_reduced() const -> bool
    {
        return std::gcd(k, q) == 1;
    }

    auto Frac::to_string() const -> std::string
    {
        return std::to_string(k) + "/" + std::to_string(q);
    }

    auto make_frac(std::int64_t k, std::int64_t q) -> Frac
    {
        if (k < 0 || q <= 0)
            throw std::invalid_argument("fraction needs k >= 0 and q > 0");
        return Frac{k, q};
    }

    namespace
    {
        auto parse_int(std::string_view s) -> std::int64_t
        {
            std::int64_t value = 0;
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
            if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
                throw std::invalid_argument("bad integer '" + std::string(s) + "'");
            return value;
        }
    }

    auto parse_frac(std::string_view text) -> Frac
    {
        auto slash = text.find('/');
        if (slash == std::string_view::npos)
            return make_frac(parse_int(text), 1);
        return make_frac(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
    }

    auto add(const Frac & a, const Frac & b) -> Frac
    {
        return Frac{a.k * b.q + b.k * a.q, a.q * b.q}.reduced();
    }

    auto ceil_div(std::int64_t a, std::int64_t b) -> std::int64_t
    {
        return a / b + ((a % b != 0) && ((a > 0) == (b > 0)) ? 1 : 0);
    }
}
