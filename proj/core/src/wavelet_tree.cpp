#include "bwtkit/wavelet_tree.hpp"

#include <algorithm>

namespace bwtkit {

wt_text::wt_text(std::span<const sym_t> codes, std::uint32_t sigma) {
    if (codes.empty()) throw std::invalid_argument("wt_text: empty sequence");
    if (sigma < 2 || sigma > MAX_SIGMA) throw std::invalid_argument("wt_text: sigma out of range");
    for (sym_t c : codes)
        if (std::uint32_t(c) >= sigma) throw std::invalid_argument("wt_text: symbol code >= sigma");

    n_ = codes.size();
    sigma_ = sigma;
    width_ = std::uint32_t(std::bit_width(sigma - 1));
    levels_.reserve(width_);

    /* stable-partition the sequence one level at a time */
    std::vector<sym_t> cur(codes.begin(), codes.end());
    std::vector<sym_t> next(n_);
    for (std::uint32_t level = 0; level < width_; ++level) {
        std::uint32_t shift = width_ - 1 - level;
        bit_vector B(n_);
        for (pos_t i = 0; i < n_; ++i)
            if ((cur[i] >> shift) & 1) B.set(i);
        B.finalize();
        if (level + 1 < width_) {
            /* stable split zeros-before-ones within each node; nodes are
             * the maximal runs sharing the top `level+1` path bits */
            pos_t start = 0;
            while (start < n_) {
                pos_t end = start;
                std::uint32_t node = std::uint32_t(cur[start]) >> (shift + 1);
                while (end < n_ && (std::uint32_t(cur[end]) >> (shift + 1)) == node) ++end;
                pos_t nz = 0;
                for (pos_t i = start; i < end; ++i) nz += !((cur[i] >> shift) & 1);
                pos_t z = start, o = start + nz;
                for (pos_t i = start; i < end; ++i) {
                    if ((cur[i] >> shift) & 1)
                        next[o++] = cur[i];
                    else
                        next[z++] = cur[i];
                }
                start = end;
            }
            cur.swap(next);
        }
        levels_.push_back(std::move(B));
    }
}

sym_t wt_text::access(pos_t i) const {
    check_position(i, n_);
    pos_t s = 0, e = n_, p = i - 1;
    std::uint32_t code = 0;
    for (std::uint32_t level = 0; level < width_; ++level) {
        const bit_vector& B = levels_[level];
        pos_t zs = B.rank0(s);
        pos_t ze = B.rank0(e) - zs;
        if (B.get(p)) {
            pos_t op = (p - s) - (B.rank0(p) - zs);
            s += ze;
            p = s + op;
            code = (code << 1) | 1;
        } else {
            pos_t zp = B.rank0(p) - zs;
            e = s + ze;
            p = s + zp;
            code <<= 1;
        }
    }
    return sym_t(code);
}

pos_t wt_text::rank(sym_t c, pos_t i) const {
    check_position(i, n_ + 1);
    check_symbol(c);
    pos_t s = 0, e = n_, a = i - 1;
    for (std::uint32_t level = 0; level < width_; ++level) {
        const bit_vector& B = levels_[level];
        pos_t zs = B.rank0(s);
        pos_t ze = B.rank0(e) - zs;
        pos_t za = B.rank0(a) - zs;
        if ((c >> (width_ - 1 - level)) & 1) {
            pos_t oa = (a - s) - za;
            s += ze;
            a = s + oa;
        } else {
            e = s + ze;
            a = s + za;
        }
    }
    return a - s;
}

void wt_text::dfs_rank_all(std::uint32_t level, pos_t s, pos_t e, pos_t a,
                           std::uint32_t code, std::span<pos_t> out) const {
    if (a <= s) return; // nothing from this class before the position
    if (level == width_) {
        if (code < sigma_) out[code] = a - s;
        return;
    }
    const bit_vector& B = levels_[level];
    pos_t zs = B.rank0(s);
    pos_t ze = B.rank0(e) - zs;
    pos_t za = B.rank0(a) - zs;
    dfs_rank_all(level + 1, s, s + ze, s + za, code << 1, out);
    dfs_rank_all(level + 1, s + ze, e, s + ze + ((a - s) - za), (code << 1) | 1, out);
}

void wt_text::rank_all(pos_t i, std::span<pos_t> out) const {
    check_position(i, n_ + 1);
    if (out.size() < sigma_) throw std::invalid_argument("wt_text: rank_all output too small");
    std::fill(out.begin(), out.begin() + sigma_, 0);
    dfs_rank_all(0, 0, n_, i - 1, 0, out);
}

pos_t wt_text::c_array(sym_t c) const {
    check_symbol(c);
    pos_t s = 0, e = n_, smaller = 0;
    for (std::uint32_t level = 0; level < width_; ++level) {
        const bit_vector& B = levels_[level];
        pos_t zs = B.rank0(s);
        pos_t ze = B.rank0(e) - zs;
        if ((c >> (width_ - 1 - level)) & 1) {
            smaller += ze;
            s += ze;
        } else {
            e = s + ze;
        }
    }
    return smaller + 1;
}

interval wt_text::bwsearch(interval iv, sym_t c) const {
    check_interval(iv);
    check_symbol(c);
    pos_t s = 0, e = n_, a = iv.left - 1, b = iv.right, smaller = 0;
    for (std::uint32_t level = 0; level < width_; ++level) {
        const bit_vector& B = levels_[level];
        pos_t zs = B.rank0(s);
        pos_t ze = B.rank0(e) - zs;
        pos_t za = B.rank0(a) - zs;
        pos_t zb = B.rank0(b) - zs;
        if ((c >> (width_ - 1 - level)) & 1) {
            pos_t oa = (a - s) - za, ob = (b - s) - zb;
            smaller += ze;
            s += ze;
            a = s + oa;
            b = s + ob;
        } else {
            e = s + ze;
            a = s + za;
            b = s + zb;
        }
    }
    return {smaller + 1 + (a - s), smaller + (b - s)};
}

std::vector<sym_t> wt_text::range_distinct(interval iv) const {
    check_interval(iv);
    std::vector<sym_t> out;
    if (iv.empty()) return out;
    dfs_distinct(0, 0, n_, iv.left - 1, iv.right, 0, [&](sym_t c) { out.push_back(c); });
    return out;
}

pos_t wt_text::bit_cost() const {
    pos_t bits = 0;
    for (const auto& B : levels_) bits += B.size() + B.size() / 4; // directory overhead bound
    return bits;
}

} // namespace bwtkit
