#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ekr {

/// Fixed-size (chosen at construction) bit set over 64-bit words. Used for
/// adjacency rows and candidate sets in the exhaustive searches.
class DynamicBitset {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    DynamicBitset() = default;
    explicit DynamicBitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const noexcept { return size_; }

    void set(std::size_t i) noexcept { words_[i >> 6] |= bit(i); }
    void reset(std::size_t i) noexcept { words_[i >> 6] &= ~bit(i); }
    bool test(std::size_t i) const noexcept { return (words_[i >> 6] & bit(i)) != 0; }

    void set_all() noexcept {
        for (auto &w : words_)
            w = ~std::uint64_t{0};
        trim();
    }

    bool any() const noexcept {
        for (auto w : words_)
            if (w)
                return true;
        return false;
    }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    /// Lowest set index, or npos.
    std::size_t first() const noexcept { return next(0); }

    /// Lowest set index >= from, or npos.
    std::size_t next(std::size_t from) const noexcept {
        if (from >= size_)
            return npos;
        std::size_t wi = from >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w)
                return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi == words_.size())
                return npos;
            w = words_[wi];
        }
    }

    DynamicBitset &operator&=(const DynamicBitset &o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }

    DynamicBitset &operator|=(const DynamicBitset &o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }

    /// this &= ~o
    DynamicBitset &subtract(const DynamicBitset &o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }

    /// Clears every index below `from`.
    void clear_below(std::size_t from) noexcept {
        const std::size_t full = std::min(from >> 6, words_.size());
        for (std::size_t i = 0; i < full; ++i)
            words_[i] = 0;
        if (full < words_.size() && (from & 63))
            words_[full] &= ~std::uint64_t{0} << (from & 63);
    }

    bool intersects(const DynamicBitset &o) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i])
                return true;
        return false;
    }

    friend DynamicBitset operator&(DynamicBitset a, const DynamicBitset &b) noexcept { return a &= b; }

    friend bool operator==(const DynamicBitset &, const DynamicBitset &) = default;

    template <typename F>
    void for_each(F &&f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                f((wi << 6) + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

private:
    static constexpr std::uint64_t bit(std::size_t i) noexcept { return std::uint64_t{1} << (i & 63); }

    void trim() noexcept {
        if (size_ & 63)
            words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace ekr
