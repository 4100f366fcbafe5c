#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace sdf {

/// Fixed-length bitset with word-level operations for the clique searches.
class Bitset {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Bitset() = default;
    explicit Bitset(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const noexcept { return nbits_; }
    std::size_t word_count() const noexcept { return words_.size(); }

    bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1ULL; }
    void set(std::size_t i) noexcept { words_[i >> 6] |= 1ULL << (i & 63); }
    void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(1ULL << (i & 63)); }

    void set_all() noexcept {
        for (auto& w : words_) w = ~0ULL;
        trim();
    }

    void clear() noexcept {
        for (auto& w : words_) w = 0;
    }

    /// Clears every bit with index <= i.
    void clear_through(std::size_t i) noexcept {
        const std::size_t full = i >> 6;
        for (std::size_t w = 0; w < full && w < words_.size(); ++w) words_[w] = 0;
        if (full < words_.size()) {
            const unsigned shift = static_cast<unsigned>(i & 63);
            const std::uint64_t keep = shift == 63 ? 0ULL : ~0ULL << (shift + 1);
            words_[full] &= keep;
        }
    }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool any() const noexcept {
        for (auto w : words_) {
            if (w) return true;
        }
        return false;
    }

    std::size_t find_first() const noexcept { return find_from(0); }
    std::size_t find_next(std::size_t i) const noexcept { return i + 1 >= nbits_ ? npos : find_from(i + 1); }

    Bitset& operator&=(const Bitset& o) noexcept {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) noexcept {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
        return *this;
    }
    Bitset& and_not(const Bitset& o) noexcept {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~o.words_[w];
        return *this;
    }
    void flip() noexcept {
        for (auto& w : words_) w = ~w;
        trim();
    }

    /// Sets *this = a & b without reallocating.
    void assign_and(const Bitset& a, const Bitset& b) noexcept {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] = a.words_[w] & b.words_[w];
    }

    /// Bitset shifted cyclically so that bit i moves to (i + k) mod size.
    Bitset rotated(std::size_t k) const {
        Bitset out(nbits_);
        for (std::size_t i = find_first(); i != npos; i = find_next(i)) out.set((i + k) % nbits_);
        return out;
    }

    std::vector<std::size_t> to_indices() const {
        std::vector<std::size_t> out;
        for (std::size_t i = find_first(); i != npos; i = find_next(i)) out.push_back(i);
        return out;
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

private:
    std::size_t find_from(std::size_t i) const noexcept {
        std::size_t w = i >> 6;
        if (w >= words_.size()) return npos;
        std::uint64_t word = words_[w] & (~0ULL << (i & 63));
        while (true) {
            if (word) return (w << 6) + static_cast<std::size_t>(std::countr_zero(word));
            if (++w >= words_.size()) return npos;
            word = words_[w];
        }
    }

    void trim() noexcept {
        if (nbits_ % 64 != 0 && !words_.empty()) words_.back() &= (1ULL << (nbits_ % 64)) - 1;
    }

    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace sdf
