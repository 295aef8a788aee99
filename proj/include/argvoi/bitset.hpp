#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace argvoi {

// Fixed-width bit set sized at construction. Arguments and attacks are
// addressed by dense indices throughout the evaluation code, so membership
// tests and set algebra run on machine words.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t size) : size_(size), blocks_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }

    bool test(std::size_t i) const { return (blocks_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { blocks_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { blocks_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    void set_all() {
        for (auto& b : blocks_) b = ~std::uint64_t{0};
        trim();
    }

    void clear() {
        for (auto& b : blocks_) b = 0;
    }

    bool any() const {
        for (auto b : blocks_)
            if (b) return true;
        return false;
    }

    bool none() const { return !any(); }

    std::size_t count() const {
        std::size_t n = 0;
        for (auto b : blocks_) n += static_cast<std::size_t>(std::popcount(b));
        return n;
    }

    // true iff other is a subset of *this
    bool contains(const Bitset& other) const {
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            if (other.blocks_[i] & ~blocks_[i]) return false;
        return true;
    }

    bool intersects(const Bitset& other) const {
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            if (blocks_[i] & other.blocks_[i]) return true;
        return false;
    }

    Bitset& operator|=(const Bitset& other) {
        for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] |= other.blocks_[i];
        return *this;
    }

    Bitset& operator&=(const Bitset& other) {
        for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= other.blocks_[i];
        return *this;
    }

    // set difference: *this \ other
    Bitset& subtract(const Bitset& other) {
        for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= ~other.blocks_[i];
        return *this;
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < blocks_.size(); ++w) {
            std::uint64_t b = blocks_[w];
            while (b) {
                const int bit = std::countr_zero(b);
                fn(w * 64 + static_cast<std::size_t>(bit));
                b &= b - 1;
            }
        }
    }

private:
    void trim() {
        if (const std::size_t tail = size_ & 63; tail != 0 && !blocks_.empty())
            blocks_.back() &= (std::uint64_t{1} << tail) - 1;
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> blocks_;
};

}  // namespace argvoi
