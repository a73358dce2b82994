#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace recolour
{
    /// Fixed-size dynamic bitset over 64-bit words. Used for adjacency rows and
    /// candidate colour sets.
    class Bitset
    {
    public:
        Bitset() = default;
        explicit Bitset(std::size_t size, bool fill = false) :
            size_(size),
            words_((size + 63) / 64, fill ? ~std::uint64_t{0} : 0)
        {
            if (fill)
                trim();
        }

        auto size() const -> std::size_t { return size_; }
        auto word_count() const -> std::size_t { return words_.size(); }
        auto words() const -> const std::vector<std::uint64_t> & { return words_; }
        auto words() -> std::vector<std::uint64_t> & { return words_; }

        auto test(std::size_t i) const -> bool { return (words_[i / 64] >> (i % 64)) & 1u; }
        void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
        void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

        auto any() const -> bool
        {
            for (auto w : words_)
                if (w)
                    return true;
            return false;
        }

        auto count() const -> std::size_t
        {
            std::size_t c = 0;
            for (auto w : words_)
                c += static_cast<std::size_t>(std::popcount(w));
            return c;
        }

        /// First set bit at or after `from`, or size() if none.
        auto next(std::size_t from) const -> std::size_t
        {
            if (from >= size_)
                return size_;
            std::size_t wi = from / 64;
            std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from % 64));
            while (true) {
                if (w)
                    return wi * 64 + static_cast<std::size_t>(std::countr_zero(w));
                if (++wi == words_.size())
                    return size_;
                w = words_[wi];
            }
        }

        auto first() const -> std::size_t { return next(0); }

        auto is_subset_of(const Bitset & other) const -> bool
        {
            for (std::size_t i = 0 ; i < words_.size() ; ++i)
                if (words_[i] & ~other.words_[i])
                    return false;
            return true;
        }

        auto operator&=(const Bitset & other) -> Bitset &
        {
            for (std::size_t i = 0 ; i < words_.size() ; ++i)
                words_[i] &= other.words_[i];
            return *this;
        }

        auto operator|=(const Bitset & other) -> Bitset &
        {
            for (std::size_t i = 0 ; i < words_.size() ; ++i)
                words_[i] |= other.words_[i];
            return *this;
        }

        auto to_vector() const -> std::vector<int>
        {
            std::vector<int> out;
            for (auto i = first() ; i < size_ ; i = next(i + 1))
                out.push_back(static_cast<int>(i));
            return out;
        }

        friend auto operator==(const Bitset &, const Bitset &) -> bool = default;

    private:
        void trim()
        {
            if (size_ % 64 && ! words_.empty())
                words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
        }

        std::size_t size_ = 0;
        std::vector<std::uint64_t> words_;
    };
}
