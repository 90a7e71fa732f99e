/*
 * wavelet_tree.hpp
 *
 * wt_text: a BWT (or any code sequence) represented with a balanced,
 * pointerless wavelet tree — one rank bitvector per level, ceil(log2
 * sigma) levels. This is the generic query backend of the library:
 * every algorithm only sees the operations below.
 *
 * All positions in the public interface are 1-based and rank(c, i)
 * counts the prefix [1, i-1]. Internally everything is 0-based.
 *
 * getIntervals / rangeDistinct are implemented as a depth-first visit
 * of the sub-tree induced by the queried slice; results are emitted
 * one by one, never buffered. The count of symbols smaller than the
 * current code (the C-array value) is accumulated along the path, so
 * no C table is stored.
 */

#ifndef BWTKIT_WAVELET_TREE_HPP_
#define BWTKIT_WAVELET_TREE_HPP_

#include <span>
#include <stdexcept>
#include <vector>

#include "bit_vector.hpp"
#include "common.hpp"

namespace bwtkit {

class wt_text {
public:
    wt_text() = default;

    /* builds the tree level by level; O(n) bits of transient space
     * beyond input and output (two byte buffers) */
    wt_text(std::span<const sym_t> codes, std::uint32_t sigma);

    pos_t size() const { return n_; }
    std::uint32_t sigma() const { return sigma_; }

    sym_t access(pos_t i) const;

    /* occurrences of c in [1, i-1]; i in [1, n+1] */
    pos_t rank(sym_t c, pos_t i) const;

    /* out[c] = rank(c, i) for every c < sigma */
    void rank_all(pos_t i, std::span<pos_t> out) const;

    /* 1 + number of symbols smaller than c, from the tree itself */
    pos_t c_array(sym_t c) const;

    /* SA interval of cW given the interval of W; accepts and produces
     * empty intervals with the positional meaning of L-1 */
    interval bwsearch(interval iv, sym_t c) const;

    std::vector<sym_t> range_distinct(interval iv) const;

    /* emit(c, range(cW)) for every non-terminator c in BWT[L,R] */
    template <class F>
    void get_intervals(interval iv, F&& emit) const {
        check_interval(iv);
        if (iv.empty()) return;
        dfs_intervals(0, 0, n_, iv.left - 1, iv.right, 0, 0, emit);
    }

    interval full_range() const { return {1, n_}; }

    pos_t count(sym_t c) const { return rank(c, n_ + 1); }
    pos_t terminators() const { return count(TERM); }

    /* range(c), possibly empty with the correct positional left end */
    interval symbol_range(sym_t c) const {
        pos_t l = c_array(c);
        return {l, l + count(c) - 1};
    }

    /* memory of the structure, in bits (payload + rank directories) */
    pos_t bit_cost() const;

    template <class F>
    friend void get_intervals_pair(const wt_text& t1, const wt_text& t2,
                                   interval iv1, interval iv2, F&& emit);

private:
    void check_position(pos_t i, pos_t hi) const {
        if (i < 1 || i > hi) throw std::out_of_range("wt_text: position out of range");
    }
    void check_interval(interval iv) const {
        if (iv.left < 1 || iv.left > n_ + 1 || iv.right > n_ || iv.right + 1 < iv.left)
            throw std::out_of_range("wt_text: invalid interval");
    }
    void check_symbol(sym_t c) const {
        if (std::uint32_t(c) >= sigma_) throw std::invalid_argument("wt_text: symbol code >= sigma");
    }

    /* DFS of the sub-tree induced by prefix positions [a, b) of node
     * [s, e) at `level`; `code` is the path prefix, `smaller` the count
     * of text symbols routed left of the path so far. */
    template <class F>
    void dfs_intervals(std::uint32_t level, pos_t s, pos_t e, pos_t a, pos_t b,
                       std::uint32_t code, pos_t smaller, F&& emit) const {
        if (b <= a) return;
        if (level == width_) {
            if (code != TERM)
                emit(sym_t(code), interval{smaller + 1 + (a - s), smaller + (b - s)});
            return;
        }
        const bit_vector& B = levels_[level];
        pos_t zs = B.rank0(s);
        pos_t ze = B.rank0(e) - zs;       // zeros in the whole node
        pos_t za = B.rank0(a) - zs;       // zeros in [s, a)
        pos_t zb = B.rank0(b) - zs;
        /* left child occupies [s, s+ze) on the next level */
        dfs_intervals(level + 1, s, s + ze, s + za, s + zb, code << 1, smaller, emit);
        dfs_intervals(level + 1, s + ze, e, s + ze + ((a - s) - za), s + ze + ((b - s) - zb),
                      (code << 1) | 1, smaller + ze, emit);
    }

    template <class F>
    void dfs_distinct(std::uint32_t level, pos_t s, pos_t e, pos_t a, pos_t b,
                      std::uint32_t code, F&& emit) const {
        if (b <= a) return;
        if (level == width_) {
            if (code != TERM) emit(sym_t(code));
            return;
        }
        const bit_vector& B = levels_[level];
        pos_t zs = B.rank0(s);
        pos_t ze = B.rank0(e) - zs;
        pos_t za = B.rank0(a) - zs;
        pos_t zb = B.rank0(b) - zs;
        dfs_distinct(level + 1, s, s + ze, s + za, s + zb, code << 1, emit);
        dfs_distinct(level + 1, s + ze, e, s + ze + ((a - s) - za), s + ze + ((b - s) - zb),
                     (code << 1) | 1, emit);
    }

    void dfs_rank_all(std::uint32_t level, pos_t s, pos_t e, pos_t a,
                      std::uint32_t code, std::span<pos_t> out) const;

    pos_t n_ = 0;
    std::uint32_t sigma_ = 0;
    std::uint32_t width_ = 0;
    std::vector<bit_vector> levels_;
};

/* Parallel left-extension over two wavelet trees: emits, for every
 * non-terminator c occurring in either slice, the pair of intervals of
 * cW on the two texts. The descent continues while at least one side
 * is non-empty; empty sides keep their positional left value. */
template <class F>
void get_intervals_pair(const wt_text& t1, const wt_text& t2,
                        interval iv1, interval iv2, F&& emit) {
    if (t1.sigma() != t2.sigma())
        throw std::invalid_argument("get_intervals_pair: alphabets differ");
    t1.check_interval(iv1);
    t2.check_interval(iv2);
    if (iv1.empty() && iv2.empty()) return;

    struct rec_t {
        const wt_text& x;
        const wt_text& y;
        F& cb;
        std::uint32_t width;
        void go(std::uint32_t level, pos_t s1, pos_t e1, pos_t a1, pos_t b1, pos_t sm1,
                pos_t s2, pos_t e2, pos_t a2, pos_t b2, pos_t sm2, std::uint32_t code) {
            if (b1 <= a1 && b2 <= a2) return;
            if (level == width) {
                if (code != TERM)
                    cb(sym_t(code), interval{sm1 + 1 + (a1 - s1), sm1 + (b1 - s1)},
                       interval{sm2 + 1 + (a2 - s2), sm2 + (b2 - s2)});
                return;
            }
            const bit_vector& B1 = x.levels_[level];
            const bit_vector& B2 = y.levels_[level];
            pos_t zs1 = B1.rank0(s1), ze1 = B1.rank0(e1) - zs1;
            pos_t za1 = B1.rank0(a1) - zs1, zb1 = B1.rank0(b1) - zs1;
            pos_t zs2 = B2.rank0(s2), ze2 = B2.rank0(e2) - zs2;
            pos_t za2 = B2.rank0(a2) - zs2, zb2 = B2.rank0(b2) - zs2;
            go(level + 1, s1, s1 + ze1, s1 + za1, s1 + zb1, sm1,
               s2, s2 + ze2, s2 + za2, s2 + zb2, sm2, code << 1);
            go(level + 1, s1 + ze1, e1, s1 + ze1 + ((a1 - s1) - za1), s1 + ze1 + ((b1 - s1) - zb1),
               sm1 + ze1, s2 + ze2, e2, s2 + ze2 + ((a2 - s2) - za2),
               s2 + ze2 + ((b2 - s2) - zb2), sm2 + ze2, (code << 1) | 1);
        }
    } rec{t1, t2, emit, t1.width_};

    rec.go(0, 0, t1.n_, iv1.left - 1, iv1.right, 0,
           0, t2.n_, iv2.left - 1, iv2.right, 0, 0);
}

} // namespace bwtkit

#endif
