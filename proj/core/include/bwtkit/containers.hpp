/*
 * containers.hpp
 *
 * The space-bounded containers behind the traversals:
 *
 *  - hybrid_queue: FIFO of (interval, depth) items organized in depth
 *    layers. A layer is a plain vector until its item count exceeds
 *    ceil(n / log2 n), then it switches to two packed bitvectors of
 *    length n (interval starts / ends). Intervals within one layer are
 *    ranges of equal-length strings, hence non-overlapping, which is
 *    what makes the bitvector form work. Bitvector layers pop
 *    left-to-right by interval start.
 *
 *  - pair_queue: same idea for pairs of intervals on two BWTs. The
 *    bitvector form stores opening/closing parentheses of the combined
 *    interval <L1+L2-1, R1+R2> plus per-side parentheses of the
 *    non-empty side intervals; an empty side is reconstructed on pop
 *    as L1 = L - L2 + 1 (and symmetrically).
 *
 * Push/pop follow the two-layer discipline: while depth-l items are
 * popped, only depth-(l+1) items may be pushed. Violations throw
 * invariant_error.
 */

#ifndef BWTKIT_CONTAINERS_HPP_
#define BWTKIT_CONTAINERS_HPP_

#include <deque>
#include <optional>
#include <tuple>
#include <vector>

#include "bit_vector.hpp"
#include "common.hpp"

namespace bwtkit {

/* run-time counters exposed through the diagnostics channel and used
 * by the monitored space invariants */
struct traversal_stats {
    std::uint64_t nodes_visited = 0;
    std::uint64_t leaves_visited = 0;
    std::uint64_t stack_pushes = 0;
    std::uint64_t queue_pushes = 0;
    std::uint64_t peak_stack_items = 0;
    std::uint64_t peak_queue_items = 0;
    std::uint64_t peak_aux_bits = 0; // containers + markers, beyond input/output
    const char* node_strategy = "none";
    const char* leaf_strategy = "none";

    void track_aux(std::uint64_t bits) {
        if (bits > peak_aux_bits) peak_aux_bits = bits;
    }
};

class hybrid_queue {
public:
    hybrid_queue(pos_t universe, pos_t threshold)
        : n_(universe), threshold_(threshold < 1 ? 1 : threshold) {}

    void push(interval iv, pos_t depth) {
        if (iv.empty()) throw invariant_error("hybrid_queue: empty interval pushed");
        layer* l = layer_for_push(depth);
        if (l->bits_mode) {
            set_bits(*l, iv);
        } else {
            l->items.push_back(iv);
            if (l->items.size() > threshold_) to_bits(*l);
        }
        ++l->count;
        ++total_pushes_;
        pos_t items = live_items();
        if (items > peak_items_) peak_items_ = items;
        track_bits();
    }

    std::optional<std::pair<interval, pos_t>> pop() {
        drop_drained();
        if (layers_.empty()) return std::nullopt;
        layer& l = layers_.front();
        l.popped = true;
        --l.count;
        if (!l.bits_mode) return std::make_pair(l.items[l.read++], l.depth);
        pos_t s = l.starts.next_set(l.scan_start);
        pos_t e = l.ends.next_set(l.scan_end);
        if (s == packed_bits::npos || e == packed_bits::npos)
            throw invariant_error("hybrid_queue: bitvector layer out of sync");
        l.scan_start = s + 1;
        l.scan_end = e + 1;
        return std::make_pair(interval{s + 1, e + 1}, l.depth);
    }

    std::uint64_t total_pushes() const { return total_pushes_; }
    std::uint64_t peak_items() const { return peak_items_; }
    std::uint64_t peak_bits() const { return peak_bits_; }

private:
    struct layer {
        pos_t depth = 0;
        bool bits_mode = false;
        bool popped = false;
        pos_t count = 0;
        std::vector<interval> items;
        std::size_t read = 0;
        packed_bits starts, ends;
        pos_t scan_start = 0, scan_end = 0;
    };

    layer* layer_for_push(pos_t depth) {
        if (layers_.empty() || depth == layers_.back().depth + 1) {
            if (layers_.size() == 2) throw invariant_error("hybrid_queue: more than two live layers");
            layers_.emplace_back();
            layers_.back().depth = depth;
        } else if (depth != layers_.back().depth) {
            throw invariant_error("hybrid_queue: push depth out of order");
        }
        layer& l = layers_.back();
        if (l.popped) throw invariant_error("hybrid_queue: push into drained layer");
        return &l;
    }

    void set_bits(layer& l, interval iv) {
        if (l.starts.get(iv.left - 1) || l.ends.get(iv.right - 1))
            throw invariant_error("hybrid_queue: overlapping interval in bitvector layer");
        l.starts.set(iv.left - 1);
        l.ends.set(iv.right - 1);
    }

    void to_bits(layer& l) {
        l.starts.assign(n_);
        l.ends.assign(n_);
        for (std::size_t i = l.read; i < l.items.size(); ++i) set_bits(l, l.items[i]);
        l.items.clear();
        l.items.shrink_to_fit();
        l.read = 0;
        l.bits_mode = true;
        track_bits();
    }

    void drop_drained() {
        while (!layers_.empty() && layers_.front().count == 0) layers_.pop_front();
    }

    pos_t live_items() const {
        pos_t t = 0;
        for (const auto& l : layers_) t += l.count;
        return t;
    }

    void track_bits() {
        pos_t bits = 0;
        for (const auto& l : layers_) {
            if (l.bits_mode)
                bits += l.starts.bit_cost() + l.ends.bit_cost();
            else
                bits += pos_t(l.items.capacity()) * sizeof(interval) * 8;
        }
        if (bits > peak_bits_) peak_bits_ = bits;
    }

    pos_t n_, threshold_;
    std::deque<layer> layers_;
    std::uint64_t total_pushes_ = 0, peak_items_ = 0, peak_bits_ = 0;
};

class pair_queue {
public:
    pair_queue(pos_t n1, pos_t n2, pos_t threshold)
        : n1_(n1), n2_(n2), n_(n1 + n2), threshold_(threshold < 1 ? 1 : threshold) {}

    struct quad {
        interval a, b;
        pos_t depth;
    };

    void push(interval a, interval b, pos_t depth) {
        if (a.empty() && b.empty()) throw invariant_error("pair_queue: both sides empty");
        layer* l = layer_for_push(depth);
        if (l->bits_mode) {
            set_bits(*l, a, b);
        } else {
            l->items.push_back({a, b});
            if (l->items.size() > threshold_) to_bits(*l);
        }
        ++l->count;
        ++total_pushes_;
        pos_t items = live_items();
        if (items > peak_items_) peak_items_ = items;
        track_bits();
    }

    std::optional<quad> pop() {
        drop_drained();
        if (layers_.empty()) return std::nullopt;
        layer& l = layers_.front();
        l.popped = true;
        --l.count;
        if (!l.bits_mode) {
            auto& q = l.items[l.read++];
            return quad{q.first, q.second, l.depth};
        }
        pos_t s = l.open.next_set(l.cur_open);
        pos_t e = l.close.next_set(l.cur_close);
        if (s == packed_bits::npos || e == packed_bits::npos)
            throw invariant_error("pair_queue: bitvector layer out of sync");
        l.cur_open = s + 1;
        l.cur_close = e + 1;
        bool has1 = l.ne1.get(s);
        bool has2 = l.ne2.get(s);
        interval a, b;
        if (has1) {
            pos_t s1 = l.open1.next_set(l.cur_open1);
            pos_t e1 = l.close1.next_set(l.cur_close1);
            l.cur_open1 = s1 + 1;
            l.cur_close1 = e1 + 1;
            a = {s1 + 1, e1 + 1};
        }
        if (has2) {
            pos_t s2 = l.open2.next_set(l.cur_open2);
            pos_t e2 = l.close2.next_set(l.cur_close2);
            l.cur_open2 = s2 + 1;
            l.cur_close2 = e2 + 1;
            b = {s2 + 1, e2 + 1};
        }
        pos_t L = s + 1;
        if (!has1) {
            pos_t l1 = L - b.left + 1; // L1 = L - L2 + 1
            a = {l1, l1 - 1};
        }
        if (!has2) {
            pos_t l2 = L - a.left + 1;
            b = {l2, l2 - 1};
        }
        return quad{a, b, l.depth};
    }

    std::uint64_t total_pushes() const { return total_pushes_; }
    std::uint64_t peak_items() const { return peak_items_; }
    std::uint64_t peak_bits() const { return peak_bits_; }

private:
    struct layer {
        pos_t depth = 0;
        bool bits_mode = false;
        bool popped = false;
        pos_t count = 0;
        std::vector<std::pair<interval, interval>> items;
        std::size_t read = 0;
        packed_bits open, close, ne1, ne2, open1, close1, open2, close2;
        pos_t cur_open = 0, cur_close = 0, cur_open1 = 0, cur_close1 = 0,
              cur_open2 = 0, cur_close2 = 0;
    };

    layer* layer_for_push(pos_t depth) {
        if (layers_.empty() || depth == layers_.back().depth + 1) {
            if (layers_.size() == 2) throw invariant_error("pair_queue: more than two live layers");
            layers_.emplace_back();
            layers_.back().depth = depth;
        } else if (depth != layers_.back().depth) {
            throw invariant_error("pair_queue: push depth out of order");
        }
        layer& l = layers_.back();
        if (l.popped) throw invariant_error("pair_queue: push into drained layer");
        return &l;
    }

    void set_bits(layer& l, interval a, interval b) {
        pos_t L = a.left + b.left - 1;
        pos_t R = a.right + b.right;
        if (l.open.get(L - 1) || l.close.get(R - 1))
            throw invariant_error("pair_queue: overlapping combined interval");
        l.open.set(L - 1);
        l.close.set(R - 1);
        if (!a.empty()) {
            l.ne1.set(L - 1);
            l.open1.set(a.left - 1);
            l.close1.set(a.right - 1);
        }
        if (!b.empty()) {
            l.ne2.set(L - 1);
            l.open2.set(b.left - 1);
            l.close2.set(b.right - 1);
        }
    }

    void to_bits(layer& l) {
        l.open.assign(n_);
        l.close.assign(n_);
        l.ne1.assign(n_);
        l.ne2.assign(n_);
        l.open1.assign(n1_);
        l.close1.assign(n1_);
        l.open2.assign(n2_);
        l.close2.assign(n2_);
        for (std::size_t i = l.read; i < l.items.size(); ++i)
            set_bits(l, l.items[i].first, l.items[i].second);
        l.items.clear();
        l.items.shrink_to_fit();
        l.read = 0;
        l.bits_mode = true;
        track_bits();
    }

    void drop_drained() {
        while (!layers_.empty() && layers_.front().count == 0) layers_.pop_front();
    }

    pos_t live_items() const {
        pos_t t = 0;
        for (const auto& l : layers_) t += l.count;
        return t;
    }

    void track_bits() {
        pos_t bits = 0;
        for (const auto& l : layers_) {
            if (l.bits_mode)
                bits += l.open.bit_cost() + l.close.bit_cost() + l.ne1.bit_cost() +
                        l.ne2.bit_cost() + l.open1.bit_cost() + l.close1.bit_cost() +
                        l.open2.bit_cost() + l.close2.bit_cost();
            else
                bits += pos_t(l.items.capacity()) * sizeof(std::pair<interval, interval>) * 8;
        }
        if (bits > peak_bits_) peak_bits_ = bits;
    }

    pos_t n1_, n2_, n_, threshold_;
    std::deque<layer> layers_;
    std::uint64_t total_pushes_ = 0, peak_items_ = 0, peak_bits_ = 0;
};

} // namespace bwtkit

#endif
