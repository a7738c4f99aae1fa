#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace turan {

/// Runtime-sized bitset backed by 64-bit words. Used for adjacency rows and
/// subgroup membership tables.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const noexcept { return size_; }

    bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    Bitset& operator&=(const Bitset& other) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }

    /// this := a & b, returning the population count of the result.
    std::size_t assign_and(const Bitset& a, const Bitset& b) noexcept {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            words_[i] = a.words_[i] & b.words_[i];
            c += static_cast<std::size_t>(std::popcount(words_[i]));
        }
        return c;
    }

    /// Indices of set bits in increasing order.
    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            auto word = words_[w];
            while (word != 0) {
                out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
                word &= word - 1;
            }
        }
        return out;
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace turan
