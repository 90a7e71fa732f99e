/*
 * packed_text.hpp
 *
 * packed_text: BWT backend for small alphabets (sigma <= 8, i.e. DNA
 * with terminator, optionally N). Symbols are packed 4 bits each in
 * 128-symbol blocks; every block carries one 32-bit counter per
 * alphabet symbol, so a single block read answers rank for ALL symbols
 * at once (rank_all). Absolute 64-bit counters every 2^23 symbols keep
 * the relative counters small.
 *
 * Same interface and conventions as wt_text (1-based, prefix-exclusive
 * rank); the two backends are interchangeable behind the algorithms.
 */

#ifndef BWTKIT_PACKED_TEXT_HPP_
#define BWTKIT_PACKED_TEXT_HPP_

#include <array>
#include <bit>
#include <span>
#include <stdexcept>
#include <vector>

#include "common.hpp"

namespace bwtkit {

class packed_text {
public:
    static constexpr std::uint32_t MAX_PACKED_SIGMA = 8;

    static bool supports(std::uint32_t sigma) { return sigma >= 2 && sigma <= MAX_PACKED_SIGMA; }

    packed_text() = default;
    packed_text(std::span<const sym_t> codes, std::uint32_t sigma);

    pos_t size() const { return n_; }
    std::uint32_t sigma() const { return sigma_; }

    sym_t access(pos_t i) const {
        check_position(i, n_);
        pos_t p = i - 1;
        return sym_t((blocks_[p >> 7].data[(p & 127) >> 4] >> (4 * (p & 15))) & 0xF);
    }

    pos_t rank(sym_t c, pos_t i) const {
        check_position(i, n_ + 1);
        check_symbol(c);
        pos_t p = i - 1;
        const block& b = blocks_[p >> 7];
        return super_[p >> SUPER_LOG][c] + b.rel[c] + count_in_block(b, c, p & 127);
    }

    void rank_all(pos_t i, std::span<pos_t> out) const {
        check_position(i, n_ + 1);
        if (out.size() < sigma_) throw std::invalid_argument("packed_text: rank_all output too small");
        pos_t p = i - 1;
        const block& b = blocks_[p >> 7];
        const auto& sup = super_[p >> SUPER_LOG];
        for (std::uint32_t c = 0; c < sigma_; ++c)
            out[c] = sup[c] + b.rel[c] + count_in_block(b, sym_t(c), p & 127);
    }

    pos_t c_array(sym_t c) const {
        check_symbol(c);
        return cum_[c] + 1;
    }

    interval bwsearch(interval iv, sym_t c) const {
        check_interval(iv);
        check_symbol(c);
        pos_t base = cum_[c] + 1;
        return {base + rank(c, iv.left), base + rank(c, iv.right + 1) - 1};
    }

    std::vector<sym_t> range_distinct(interval iv) const {
        check_interval(iv);
        std::vector<sym_t> out;
        if (iv.empty()) return out;
        std::array<pos_t, 8> lo{}, hi{};
        rank_all(iv.left, std::span<pos_t>(lo.data(), sigma_));
        rank_all(iv.right + 1, std::span<pos_t>(hi.data(), sigma_));
        for (std::uint32_t c = 1; c < sigma_; ++c)
            if (hi[c] > lo[c]) out.push_back(sym_t(c));
        return out;
    }

    template <class F>
    void get_intervals(interval iv, F&& emit) const {
        check_interval(iv);
        if (iv.empty()) return;
        std::array<pos_t, 8> lo{}, hi{};
        rank_all(iv.left, std::span<pos_t>(lo.data(), sigma_));
        rank_all(iv.right + 1, std::span<pos_t>(hi.data(), sigma_));
        for (std::uint32_t c = 1; c < sigma_; ++c)
            if (hi[c] > lo[c])
                emit(sym_t(c), interval{cum_[c] + 1 + lo[c], cum_[c] + hi[c]});
    }

    interval full_range() const { return {1, n_}; }

    pos_t count(sym_t c) const {
        check_symbol(c);
        return cum_[c + 1] - cum_[c];
    }
    pos_t terminators() const { return count(TERM); }

    interval symbol_range(sym_t c) const {
        check_symbol(c);
        return {cum_[c] + 1, cum_[c + 1]};
    }

    pos_t bit_cost() const {
        return pos_t(blocks_.size()) * sizeof(block) * 8 + pos_t(super_.size()) * sizeof(super_entry) * 8;
    }

    template <class F>
    friend void get_intervals_pair(const packed_text& t1, const packed_text& t2,
                                   interval iv1, interval iv2, F&& emit);

private:
    static constexpr unsigned SUPER_LOG = 23; // symbols per superblock

    struct block {
        std::array<std::uint32_t, 8> rel; // per-symbol count before this block, within superblock
        std::array<std::uint64_t, 8> data; // 128 nibbles
    };
    using super_entry = std::array<std::uint64_t, 8>;

    void check_position(pos_t i, pos_t hi) const {
        if (i < 1 || i > hi) throw std::out_of_range("packed_text: position out of range");
    }
    void check_interval(interval iv) const {
        if (iv.left < 1 || iv.left > n_ + 1 || iv.right > n_ || iv.right + 1 < iv.left)
            throw std::out_of_range("packed_text: invalid interval");
    }
    void check_symbol(sym_t c) const {
        if (std::uint32_t(c) >= sigma_) throw std::invalid_argument("packed_text: symbol code >= sigma");
    }

    /* occurrences of c among the first k nibbles of the block, 0<=k<=127 */
    static pos_t count_in_block(const block& b, sym_t c, pos_t k) {
        constexpr std::uint64_t LOW = 0x1111111111111111ULL;
        const std::uint64_t pat = LOW * c;
        pos_t r = 0;
        pos_t full = k >> 4;
        for (pos_t w = 0; w < full; ++w) {
            std::uint64_t x = b.data[w] ^ pat;
            x = (x | (x >> 1) | (x >> 2) | (x >> 3)) & LOW;
            r += 16 - std::popcount(x);
        }
        pos_t tail = k & 15;
        if (tail) {
            std::uint64_t mask = (std::uint64_t(1) << (4 * tail)) - 1;
            std::uint64_t x = b.data[full] ^ pat;
            x = (x | (x >> 1) | (x >> 2) | (x >> 3)) & LOW & mask;
            r += tail - std::popcount(x);
        }
        return r;
    }

    pos_t n_ = 0;
    std::uint32_t sigma_ = 0;
    std::vector<block> blocks_;
    std::vector<super_entry> super_;
    std::array<pos_t, 9> cum_{}; // cumulative symbol counts
};

template <class F>
void get_intervals_pair(const packed_text& t1, const packed_text& t2,
                        interval iv1, interval iv2, F&& emit) {
    if (t1.sigma() != t2.sigma())
        throw std::invalid_argument("get_intervals_pair: alphabets differ");
    t1.check_interval(iv1);
    t2.check_interval(iv2);
    if (iv1.empty() && iv2.empty()) return;
    std::uint32_t sigma = t1.sigma();
    std::array<pos_t, 8> lo1{}, hi1{}, lo2{}, hi2{};
    t1.rank_all(iv1.left, std::span<pos_t>(lo1.data(), sigma));
    t1.rank_all(iv1.right + 1, std::span<pos_t>(hi1.data(), sigma));
    t2.rank_all(iv2.left, std::span<pos_t>(lo2.data(), sigma));
    t2.rank_all(iv2.right + 1, std::span<pos_t>(hi2.data(), sigma));
    for (std::uint32_t c = 1; c < sigma; ++c) {
        if (hi1[c] > lo1[c] || hi2[c] > lo2[c])
            emit(sym_t(c), interval{t1.cum_[c] + 1 + lo1[c], t1.cum_[c] + hi1[c]},
                 interval{t2.cum_[c] + 1 + lo2[c], t2.cum_[c] + hi2[c]});
    }
}

} // namespace bwtkit

#endif
