/*
 * bit_vector.hpp
 *
 * Two packed bit containers:
 *
 *  - packed_bits: a plain mutable bit array with fast "next set bit"
 *    scanning. Used by the hybrid queues for their bitvector layers and
 *    by lcp_array for the defined-flags.
 *
 *  - bit_vector: a static bitvector with an o(n)-bit rank directory
 *    (relative counters every 512 bits, absolute counters every 65536
 *    bits). Building block of the wavelet tree.
 *
 * Both are 0-based; the 1-based convention of the text interfaces lives one layer
 * up, in the text classes.
 */

#ifndef BWTKIT_BIT_VECTOR_HPP_
#define BWTKIT_BIT_VECTOR_HPP_

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

#include "common.hpp"

namespace bwtkit {

class packed_bits {
public:
    static constexpr pos_t npos = ~pos_t(0);

    packed_bits() = default;
    explicit packed_bits(pos_t n) { assign(n); }

    void assign(pos_t n) {
        n_ = n;
        words_.assign((n + 63) / 64, 0);
    }

    pos_t size() const { return n_; }
    pos_t bit_cost() const { return 64 * words_.size(); }

    void set(pos_t i) {
        assert(i < n_);
        words_[i >> 6] |= std::uint64_t(1) << (i & 63);
    }

    void clear(pos_t i) {
        assert(i < n_);
        words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }

    bool get(pos_t i) const {
        assert(i < n_);
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    /* first set position >= from, or npos */
    pos_t next_set(pos_t from) const {
        if (from >= n_) return npos;
        pos_t w = from >> 6;
        std::uint64_t cur = words_[w] & (~std::uint64_t(0) << (from & 63));
        while (true) {
            if (cur) {
                pos_t p = (w << 6) + pos_t(std::countr_zero(cur));
                return p < n_ ? p : npos;
            }
            if (++w == words_.size()) return npos;
            cur = words_[w];
        }
    }

private:
    std::vector<std::uint64_t> words_;
    pos_t n_ = 0;
};

class bit_vector {
public:
    bit_vector() = default;
    explicit bit_vector(pos_t n) : n_(n), words_((n + 63) / 64, 0) {}

    pos_t size() const { return n_; }

    /* mutation is only allowed before finalize() */
    void set(pos_t i) {
        assert(!built_ && i < n_);
        words_[i >> 6] |= std::uint64_t(1) << (i & 63);
    }

    bool get(pos_t i) const {
        assert(i < n_);
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    void finalize();

    /* number of 1 bits in [0, i), 0 <= i <= n */
    pos_t rank1(pos_t i) const {
        assert(built_ && i <= n_);
        pos_t r = super_[i >> SUPER_LOG] + block_[i >> BLOCK_LOG];
        pos_t w = (i >> BLOCK_LOG) << (BLOCK_LOG - 6);
        for (pos_t end = i >> 6; w < end; ++w) r += std::popcount(words_[w]);
        if (i & 63)
            r += std::popcount(words_[i >> 6] & ((std::uint64_t(1) << (i & 63)) - 1));
        return r;
    }

    pos_t rank0(pos_t i) const { return i - rank1(i); }
    pos_t ones() const { return rank1(n_); }

private:
    static constexpr unsigned BLOCK_LOG = 9;  // 512-bit blocks
    static constexpr unsigned SUPER_LOG = 16; // 65536-bit superblocks

    pos_t n_ = 0;
    bool built_ = false;
    std::vector<std::uint64_t> words_;
    std::vector<std::uint64_t> super_;
    std::vector<std::uint16_t> block_;
};

} // namespace bwtkit

#endif
