/*
 * lcp.hpp
 *
 * LCP array construction from the BWT of a collection.
 *
 * Values are split in two classes: node-type entries (adjacent
 * suffixes distinct) sit at child boundaries of suffix-tree nodes and
 * equal the node's string depth; leaf-type entries (adjacent suffixes
 * equal) sit inside leaf ranges and equal the leaf's string depth,
 * terminator excluded. node_type() fills the former -- with the
 * queue-based BGOS pass on large alphabets, with the Weiner-link
 * enumeration otherwise -- and leaf_type() fills the latter.
 *
 * Every cell is written exactly once; lcp_array enforces that with a
 * defined-flag per entry, which doubles as the bottom (undefined)
 * marker.
 */

#ifndef BWTKIT_LCP_HPP_
#define BWTKIT_LCP_HPP_

#include <optional>
#include <vector>

#include "traversal.hpp"

namespace bwtkit {

class lcp_array {
public:
    explicit lcp_array(pos_t n) : n_(n), vals_(n, 0), defined_(n) {}

    pos_t size() const { return n_; }
    bool is_defined(pos_t i) const { return defined_.get(i - 1); }

    std::uint32_t value(pos_t i) const {
        if (!is_defined(i)) throw invariant_error("lcp_array: reading undefined entry");
        return vals_[i - 1];
    }

    /* write-once: rewriting a defined entry is an invariant violation */
    void set(pos_t i, pos_t v) {
        if (i < 1 || i > n_) throw std::out_of_range("lcp_array: index out of range");
        if (v > 0xFFFFFFFFull) throw std::out_of_range("lcp_array: value exceeds 32 bits");
        if (defined_.get(i - 1)) throw invariant_error("lcp_array: entry written twice");
        defined_.set(i - 1);
        vals_[i - 1] = std::uint32_t(v);
        ++defined_count_;
    }

    bool complete() const { return defined_count_ == n_; }
    pos_t defined_count() const { return defined_count_; }

    std::uint32_t max_value() const {
        std::uint32_t m = 0;
        for (auto v : vals_) m = std::max(m, v);
        return m;
    }

    const std::vector<std::uint32_t>& values() const { return vals_; }

private:
    pos_t n_;
    std::vector<std::uint32_t> vals_;
    packed_bits defined_;
    pos_t defined_count_ = 0;
};

enum class lcp_strategy { automatic, bgos, stack };

struct algo_options {
    lcp_strategy node = lcp_strategy::automatic;
    container_kind leaf = container_kind::automatic;
    std::optional<pos_t> queue_threshold; // hybrid representation switch override
};

/* Queue-based breadth-first pass: fills all node-type entries, leaves the rest
 * undefined. Seeds LCP[C[c]] <- 0 and the queue with <range(c), 1> for
 * every occurring symbol (terminator included -- its range is extended
 * like any other, only extension BY the terminator never happens). */
template <class Text>
void bgos(const Text& st, lcp_array& lcp, traversal_stats* stats = nullptr,
          std::optional<pos_t> queue_threshold = std::nullopt) {
    const pos_t n = st.size();
    hybrid_queue q(n, queue_threshold.value_or(hybrid_threshold(n)));

    std::vector<pos_t> counts(st.sigma());
    st.rank_all(n + 1, counts);
    pos_t start = 1;
    for (std::uint32_t c = 0; c < st.sigma(); ++c) {
        if (counts[c] > 0) {
            lcp.set(start, 0);
            q.push({start, start + counts[c] - 1}, 1);
        }
        start += counts[c];
    }

    while (auto item = q.pop()) {
        auto [iv, depth] = *item;
        st.get_intervals(iv, [&](sym_t, interval jv) {
            if (jv.right != n && !lcp.is_defined(jv.right + 1)) {
                lcp.set(jv.right + 1, depth);
                q.push(jv, depth + 1);
            }
        });
    }

    if (q.total_pushes() > n + st.sigma())
        throw invariant_error("bgos: queue push count exceeds n + sigma");
    if (stats) {
        stats->queue_pushes += q.total_pushes();
        if (q.peak_items() > stats->peak_queue_items) stats->peak_queue_items = q.peak_items();
        stats->track_aux(q.peak_bits());
    }
}

/* fills node-type entries and LCP[1] */
template <class Text>
void node_type(const Text& st, lcp_array& lcp, lcp_strategy force = lcp_strategy::automatic,
               traversal_stats* stats = nullptr,
               std::optional<pos_t> queue_threshold = std::nullopt) {
    bool use_bgos = force == lcp_strategy::bgos ||
                    (force == lcp_strategy::automatic && bgos_preferred(st.size(), st.sigma()));
    if (stats) stats->node_strategy = use_bgos ? "bgos" : "stack";
    if (use_bgos) {
        bgos(st, lcp, stats, queue_threshold);
    } else {
        enumerate_nodes(st, [&](const node_repr& x) {
            for (std::size_t i = 1; i + 1 < x.first.size(); ++i) lcp.set(x.first[i], x.depth);
        }, stats);
    }
    if (!lcp.is_defined(1)) lcp.set(1, 0);
}

/* fills leaf-type entries: LCP[L+1..R] <- depth for every leaf <L,R>.
 * The visited intervals must cover [1, n]; the cover is checked. */
template <class Text>
void leaf_type(const Text& st, lcp_array& lcp, container_kind force = container_kind::automatic,
               traversal_stats* stats = nullptr,
               std::optional<pos_t> queue_threshold = std::nullopt) {
    pos_t covered = 0;
    enumerate_leaves(st, force, [&](leaf_item leaf) {
        covered += leaf.iv.length();
        for (pos_t i = leaf.iv.left + 1; i <= leaf.iv.right; ++i) lcp.set(i, leaf.depth);
    }, stats, queue_threshold);
    if (covered != st.size())
        throw invariant_error("leaf_type: leaf ranges do not cover the suffix array");
}

template <class Text>
lcp_array build_lcp(const Text& st, const algo_options& opts, traversal_stats* stats = nullptr) {
    if (st.terminators() == 0) throw malformed_input("build_lcp: BWT has no terminator");
    lcp_array lcp(st.size());
    node_type(st, lcp, opts.node, stats, opts.queue_threshold);
    container_kind leaf = opts.leaf;
    if (leaf == container_kind::automatic && opts.node != lcp_strategy::automatic)
        leaf = opts.node == lcp_strategy::bgos ? container_kind::queue : container_kind::stack;
    leaf_type(st, lcp, leaf, stats, opts.queue_threshold);
    if (!lcp.complete()) throw invariant_error("build_lcp: undefined entries remain");
    return lcp;
}

template <class Text>
lcp_array build_lcp(const Text& st, lcp_strategy force = lcp_strategy::automatic,
                    traversal_stats* stats = nullptr) {
    algo_options opts;
    opts.node = force;
    return build_lcp(st, opts, stats);
}

} // namespace bwtkit

#endif
