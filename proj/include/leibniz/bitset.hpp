#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace leibniz {

/// Fixed-size bitset over node indices; sized at construction.
class NodeSet {
public:
    NodeSet() = default;
    explicit NodeSet(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const noexcept { return size_; }
    void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1; }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool any() const noexcept {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    std::optional<std::size_t> first() const noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
        return std::nullopt;
    }
    std::optional<std::size_t> last() const noexcept {
        for (std::size_t k = words_.size(); k-- > 0;)
            if (words_[k]) return k * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_[k]));
        return std::nullopt;
    }
    /// True iff every bit of *this is also set in other.
    bool is_subset_of(const NodeSet& other) const noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~other.words_[k]) return false;
        return true;
    }

    NodeSet& operator&=(const NodeSet& o) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    NodeSet& operator|=(const NodeSet& o) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    friend NodeSet operator&(NodeSet a, const NodeSet& b) noexcept { return a &= b; }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    bool operator==(const NodeSet&) const = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace leibniz
