#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace quadgraph {

/// Fixed-size bitset sized at runtime; adjacency rows.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    size_t size() const { return n_; }
    void set(size_t i) { w_[i >> 6] |= (std::uint64_t(1) << (i & 63)); }
    void reset(size_t i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool test(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    size_t count() const {
        size_t c = 0;
        for (auto w : w_) c += size_t(std::popcount(w));
        return c;
    }

    size_t and_count(const Bitset& o) const {
        size_t c = 0;
        for (size_t i = 0; i < w_.size(); ++i) c += size_t(std::popcount(w_[i] & o.w_[i]));
        return c;
    }

    bool intersects(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }

    /// Index of the first set bit at or after `from`, or size() if none.
    size_t next_set(size_t from) const {
        if (from >= n_) return n_;
        size_t word = from >> 6;
        std::uint64_t cur = w_[word] & (~std::uint64_t(0) << (from & 63));
        while (true) {
            if (cur) {
                size_t i = (word << 6) + size_t(std::countr_zero(cur));
                return i < n_ ? i : n_;
            }
            if (++word >= w_.size()) return n_;
            cur = w_[word];
        }
    }

    template <typename Fn>
    void for_each_set(Fn&& fn) const {
        for (size_t word = 0; word < w_.size(); ++word) {
            std::uint64_t cur = w_[word];
            while (cur) {
                size_t i = (word << 6) + size_t(std::countr_zero(cur));
                if (i < n_) fn(i);
                cur &= cur - 1;
            }
        }
    }

    const std::vector<std::uint64_t>& words() const { return w_; }

private:
    size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace quadgraph
