/*
 * traversal.hpp
 *
 * The three enumeration engines over a BWT:
 *
 *  - enumerate_nodes: Weiner-link tree visit of all right-maximal
 *    substrings (root included), stack-based. Children are pushed in
 *    decreasing order of range length, which bounds the stack by
 *    sigma * (ceil(log2 n) + 1) elements; the bound is checked at
 *    every push.
 *
 *  - enumerate_leaves: visit of all ranges of strings W# (string depth
 *    terminator excluded), starting from range(#) and left-extending
 *    with non-terminator symbols; stack or hybrid queue.
 *
 *  - enumerate_st_intervals: suffix-array intervals of the internal
 *    suffix-tree nodes of a single text, by breadth-first left
 *    extension over distinct intervals. Width-1 intervals cannot lead
 *    to internal nodes and are pruned, so the visit touches each
 *    internal node interval exactly once.
 */

#ifndef BWTKIT_TRAVERSAL_HPP_
#define BWTKIT_TRAVERSAL_HPP_

#include <optional>
#include <unordered_set>
#include <vector>

#include "containers.hpp"
#include "node_repr.hpp"

namespace bwtkit {

enum class container_kind { automatic, stack, queue };

struct leaf_item {
    interval iv;
    pos_t depth; // |W| for the string W#, terminator excluded

    friend bool operator==(const leaf_item&, const leaf_item&) = default;
};

namespace detail {

inline void bound_stack(std::size_t items, pos_t n, std::uint32_t sigma, const char* who) {
    if (items > std::size_t(sigma) * (ceil_log2(n) + 1))
        throw invariant_error(std::string(who) + ": stack bound exceeded");
}

} // namespace detail

template <class Text, class Visit>
void enumerate_nodes(const Text& st, Visit&& visit, traversal_stats* stats = nullptr) {
    const pos_t n = st.size();
    std::vector<node_repr> stack;
    stack.push_back(root_repr(st));
    weiner_scratch scratch;
    std::uint64_t aux_items = 0;
    while (!stack.empty()) {
        node_repr x = std::move(stack.back());
        stack.pop_back();
        visit(static_cast<const node_repr&>(x));
        if (stats) ++stats->nodes_visited;
        weiner_into(st, x, scratch);
        sort_for_stack(scratch.links);
        for (auto it = scratch.links.rbegin(); it != scratch.links.rend(); ++it) {
            stack.push_back(std::move(it->node));
            detail::bound_stack(stack.size(), n, st.sigma(), "enumerate_nodes");
        }
        if (stats) {
            stats->stack_pushes += scratch.links.size();
            if (stack.size() > stats->peak_stack_items) stats->peak_stack_items = stack.size();
            aux_items = 0;
            for (const auto& r : stack) aux_items += r.first.size();
            stats->track_aux(aux_items * 64);
        }
    }
}

template <class Text, class Visit>
void enumerate_leaves(const Text& st, container_kind kind, Visit&& visit,
                      traversal_stats* stats = nullptr,
                      std::optional<pos_t> queue_threshold = std::nullopt) {
    const pos_t n = st.size();
    const pos_t m = st.terminators();
    if (m == 0) throw malformed_input("enumerate_leaves: BWT has no terminator");
    bool use_queue = kind == container_kind::queue ||
                     (kind == container_kind::automatic && queue_preferred(n, st.sigma()));
    if (stats) stats->leaf_strategy = use_queue ? "queue" : "stack";

    if (use_queue) {
        hybrid_queue q(n, queue_threshold.value_or(hybrid_threshold(n)));
        q.push({1, m}, 0);
        while (auto item = q.pop()) {
            auto [iv, depth] = *item;
            visit(leaf_item{iv, depth});
            if (stats) ++stats->leaves_visited;
            st.get_intervals(iv, [&](sym_t, interval jv) { q.push(jv, depth + 1); });
        }
        if (stats) {
            stats->queue_pushes += q.total_pushes();
            if (q.peak_items() > stats->peak_queue_items) stats->peak_queue_items = q.peak_items();
            stats->track_aux(q.peak_bits());
        }
        return;
    }

    std::vector<leaf_item> stack;
    stack.push_back({{1, m}, 0});
    std::vector<std::pair<sym_t, interval>> kids;
    while (!stack.empty()) {
        leaf_item top = stack.back();
        stack.pop_back();
        visit(top);
        if (stats) ++stats->leaves_visited;
        kids.clear();
        st.get_intervals(top.iv, [&](sym_t c, interval jv) { kids.emplace_back(c, jv); });
        std::stable_sort(kids.begin(), kids.end(), [](const auto& a, const auto& b) {
            pos_t la = a.second.length(), lb = b.second.length();
            if (la != lb) return la < lb;
            return a.first < b.first;
        });
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
            stack.push_back({it->second, top.depth + 1});
            detail::bound_stack(stack.size(), n, st.sigma(), "enumerate_leaves");
        }
        if (stats) {
            stats->stack_pushes += kids.size();
            if (stack.size() > stats->peak_stack_items) stats->peak_stack_items = stack.size();
            stats->track_aux(std::uint64_t(stack.size()) * sizeof(leaf_item) * 8);
        }
    }
}

/* Internal suffix-tree node intervals of a single text, from a
 * breadth-first queue of intervals seeded with the ranges of the
 * occurring symbols, left-extended with getIntervals. An interval of
 * width >= 2 is the range of exactly one internal node, and the suffix
 * chain of any internal node's minimal string consists of width >= 2
 * intervals, so pruning width-1 intervals loses nothing. Visited
 * intervals are de-duplicated exactly, which also bounds the queue by
 * the number of internal nodes. */
template <class Text, class Visit>
void enumerate_st_intervals(const Text& st, Visit&& visit, traversal_stats* stats = nullptr) {
    const pos_t n = st.size();
    if (st.terminators() != 1)
        throw malformed_input("enumerate_st_intervals: input is not a single text");
    if (n >> 32)
        throw std::invalid_argument("enumerate_st_intervals: texts beyond 2^32 unsupported");
    if (n < 2) return;
    visit(interval{1, n}); // the root, never produced by an extension

    std::unordered_set<std::uint64_t> seen;
    auto key = [](interval iv) { return (iv.left << 32) | iv.right; };
    hybrid_queue q(n, hybrid_threshold(n));

    auto handle = [&](interval iv, pos_t depth) {
        if (iv.length() < 2) return;
        if (!seen.insert(key(iv)).second) return;
        visit(iv);
        q.push(iv, depth);
    };

    for (std::uint32_t c = 1; c < st.sigma(); ++c) handle(st.symbol_range(c), 1);
    while (auto item = q.pop()) {
        auto [iv, depth] = *item;
        st.get_intervals(iv, [&](sym_t, interval jv) { handle(jv, depth + 1); });
    }
    if (stats) {
        stats->queue_pushes += q.total_pushes();
        stats->track_aux(q.peak_bits() + std::uint64_t(seen.size()) * 128);
    }
}

} // namespace bwtkit

#endif
