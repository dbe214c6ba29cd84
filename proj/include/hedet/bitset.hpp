#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hedet {

/// Fixed-width dynamic bitset over 64-bit words. Used for adjacency rows,
/// colour domains and colour images.
class Bitset {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Bitset() = default;
    explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const noexcept { return bits_; }

    bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    void set_all() noexcept
    {
        for (auto & w : words_)
            w = ~std::uint64_t{0};
        trim();
    }

    void clear() noexcept
    {
        for (auto & w : words_)
            w = 0;
    }

    std::size_t count() const noexcept
    {
        std::size_t total = 0;
        for (auto w : words_)
            total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }

    bool any() const noexcept
    {
        for (auto w : words_)
            if (w)
                return true;
        return false;
    }

    bool none() const noexcept { return ! any(); }

    bool intersects(const Bitset & other) const noexcept
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & other.words_[k])
                return true;
        return false;
    }

    std::size_t intersection_count(const Bitset & other) const noexcept
    {
        std::size_t total = 0;
        for (std::size_t k = 0; k < words_.size(); ++k)
            total += static_cast<std::size_t>(std::popcount(words_[k] & other.words_[k]));
        return total;
    }

    Bitset & operator&=(const Bitset & other) noexcept
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] &= other.words_[k];
        return *this;
    }

    Bitset & operator|=(const Bitset & other) noexcept
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] |= other.words_[k];
        return *this;
    }

    /// Set difference.
    Bitset & operator-=(const Bitset & other) noexcept
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] &= ~other.words_[k];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset & b) noexcept { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset & b) noexcept { return a |= b; }
    friend Bitset operator-(Bitset a, const Bitset & b) noexcept { return a -= b; }

    bool operator==(const Bitset &) const = default;

    std::size_t first() const noexcept { return next_from(0); }

    /// Smallest set index >= from, or npos.
    std::size_t next_from(std::size_t from) const noexcept
    {
        if (from >= bits_)
            return npos;
        std::size_t k = from >> 6;
        std::uint64_t w = words_[k] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w)
                return (k << 6) + static_cast<std::size_t>(std::countr_zero(w));
            if (++k == words_.size())
                return npos;
            w = words_[k];
        }
    }

    template <typename F>
    void for_each(F && f) const
    {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                f((k << 6) + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> to_vector() const
    {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    std::span<const std::uint64_t> words() const noexcept { return words_; }

private:
    void trim() noexcept
    {
        if (bits_ & 63)
            words_.back() &= (std::uint64_t{1} << (bits_ & 63)) - 1;
    }

    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace hedet
