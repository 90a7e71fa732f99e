/*
 * merge.hpp
 *
 * Merging the BWTs of two collections by computing the document array
 * of their union, plus the optional LCP-of-the-union computed during
 * the merge.
 *
 * The leaf pass navigates pairs of intervals <range1(W#), range2(W#)>
 * (one possibly empty, with positional left end). For a pair popped at
 * depth l the combined range is <L1+L2-1, R1+R2>; its first R1-L1+1
 * positions get DA = 0, the rest DA = 1, and -- when the LCP is wanted
 * -- positions [L+2-1..R] inside the range get LCP = l. Node-type LCP
 * values of the union are filled afterwards by a paired node pass: the
 * Weiner-link enumeration lifted to pairs of nodes whose child
 * boundaries are kept for all sigma symbols per side (empty children
 * as zero-width entries), so the two sides stay aligned and combined
 * boundaries are simply first1[c] + first2[c] - 1. On large alphabets
 * a paired BGOS pass over the virtual union replaces the node pass.
 */

#ifndef BWTKIT_MERGE_HPP_
#define BWTKIT_MERGE_HPP_

#include <span>
#include <utility>
#include <vector>

#include "lcp.hpp"

namespace bwtkit {

class document_array {
public:
    document_array() = default;

    /* takes the construction staging (one byte per position, 0 or 1) */
    explicit document_array(const std::vector<std::uint8_t>& staged) {
        n_ = staged.size();
        bits_.assign(n_);
        for (pos_t i = 0; i < n_; ++i) {
            if (staged[i] == 1) {
                bits_.set(i);
                ++ones_;
            }
        }
    }

    static document_array from_bits(const std::vector<bool>& v) {
        std::vector<std::uint8_t> staged(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) staged[i] = v[i];
        return document_array(staged);
    }

    pos_t size() const { return n_; }
    bool operator[](pos_t i) const { return bits_.get(i - 1); } // 1-based
    pos_t count1() const { return ones_; }
    pos_t count0() const { return n_ - ones_; }

    std::vector<std::uint8_t> to_bytes() const {
        std::vector<std::uint8_t> out(n_);
        for (pos_t i = 0; i < n_; ++i) out[i] = bits_.get(i);
        return out;
    }

    friend bool operator==(const document_array& a, const document_array& b) {
        if (a.n_ != b.n_) return false;
        for (pos_t i = 1; i <= a.n_; ++i)
            if (a[i] != b[i]) return false;
        return true;
    }

private:
    packed_bits bits_;
    pos_t n_ = 0;
    pos_t ones_ = 0;
};

namespace detail {

/* one write per DA position, checked through a 0xFF sentinel */
inline void da_write(std::vector<std::uint8_t>& da, pos_t i, std::uint8_t v) {
    if (da[i - 1] != 0xFF) throw invariant_error("merge: DA cell written twice");
    da[i - 1] = v;
}

template <class Text>
void check_merge_inputs(const Text& a, const Text& b) {
    if (a.sigma() != b.sigma())
        throw std::invalid_argument("merge: inputs must share one alphabet");
    if (a.terminators() == 0 || b.terminators() == 0)
        throw malformed_input("merge: each input must contain at least one terminator");
}

/* leaf pass: document array, and leaf-type LCP values when lcp != nullptr */
template <class Text>
void merge_leaf_pass(const Text& a, const Text& b, container_kind kind,
                     std::vector<std::uint8_t>& da, lcp_array* lcp,
                     traversal_stats* stats, std::optional<pos_t> queue_threshold) {
    const pos_t n = a.size() + b.size();
    bool use_queue = kind == container_kind::queue ||
                     (kind == container_kind::automatic && queue_preferred(n, a.sigma()));
    if (stats) stats->leaf_strategy = use_queue ? "queue" : "stack";

    pos_t covered = 0;
    auto emit = [&](interval iv1, interval iv2, pos_t depth) {
        pos_t L = iv1.left + iv2.left - 1;
        pos_t mid = iv2.left + iv1.right; // first position of the C2 block
        pos_t R = iv1.right + iv2.right;
        for (pos_t i = L; i < mid; ++i) da_write(da, i, 0);
        for (pos_t i = mid; i <= R; ++i) da_write(da, i, 1);
        covered += R + 1 - L;
        if (lcp)
            for (pos_t i = L + 1; i <= R; ++i) lcp->set(i, depth);
    };

    interval seed1{1, a.terminators()};
    interval seed2{1, b.terminators()};

    if (use_queue) {
        pair_queue q(a.size(), b.size(), queue_threshold.value_or(hybrid_threshold(n)));
        q.push(seed1, seed2, 0);
        while (auto item = q.pop()) {
            emit(item->a, item->b, item->depth);
            if (stats) ++stats->leaves_visited;
            get_intervals_pair(a, b, item->a, item->b, [&](sym_t, interval j1, interval j2) {
                q.push(j1, j2, item->depth + 1);
            });
        }
        if (stats) {
            stats->queue_pushes += q.total_pushes();
            if (q.peak_items() > stats->peak_queue_items) stats->peak_queue_items = q.peak_items();
            stats->track_aux(q.peak_bits());
        }
    } else {
        struct rec {
            interval a, b;
            pos_t depth;
        };
        std::vector<rec> stack;
        stack.push_back({seed1, seed2, 0});
        std::vector<std::tuple<sym_t, interval, interval>> kids;
        while (!stack.empty()) {
            rec top = stack.back();
            stack.pop_back();
            emit(top.a, top.b, top.depth);
            if (stats) ++stats->leaves_visited;
            kids.clear();
            get_intervals_pair(a, b, top.a, top.b, [&](sym_t c, interval j1, interval j2) {
                kids.emplace_back(c, j1, j2);
            });
            /* sort by combined length, push back-to-front */
            std::stable_sort(kids.begin(), kids.end(), [](const auto& x, const auto& y) {
                pos_t lx = std::get<1>(x).length() + std::get<2>(x).length();
                pos_t ly = std::get<1>(y).length() + std::get<2>(y).length();
                if (lx != ly) return lx < ly;
                return std::get<0>(x) < std::get<0>(y);
            });
            for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
                stack.push_back({std::get<1>(*it), std::get<2>(*it), top.depth + 1});
                detail::bound_stack(stack.size(), n, a.sigma(), "merge_leaf_pass");
            }
            if (stats) {
                stats->stack_pushes += kids.size();
                if (stack.size() > stats->peak_stack_items) stats->peak_stack_items = stack.size();
                stats->track_aux(std::uint64_t(stack.size()) * sizeof(rec) * 8);
            }
        }
    }
    if (covered != n)
        throw invariant_error("merge: leaf ranges do not cover the merged suffix array");
}

/* pair of suffix-tree nodes over the same string, boundaries kept for
 * every symbol so the sides stay aligned; entry sigma is the exclusive
 * end right(W)+1 */
struct pair_node {
    std::vector<pos_t> b1, b2;
    pos_t depth;
};

/* paired Weiner-link node pass filling node-type LCP values of the union */
template <class Text>
void merge_node_pass_stack(const Text& a, const Text& b, lcp_array& lcp,
                           traversal_stats* stats) {
    const std::uint32_t sigma = a.sigma();
    const pos_t n = a.size() + b.size();

    std::vector<pos_t> ca(sigma), cb(sigma);
    for (std::uint32_t c = 0; c < sigma; ++c) {
        ca[c] = a.c_array(sym_t(c));
        cb[c] = b.c_array(sym_t(c));
    }

    pair_node root;
    root.depth = 0;
    root.b1.resize(sigma + 1);
    root.b2.resize(sigma + 1);
    for (std::uint32_t c = 0; c < sigma; ++c) {
        root.b1[c] = ca[c];
        root.b2[c] = cb[c];
    }
    root.b1[sigma] = a.size() + 1;
    root.b2[sigma] = b.size() + 1;

    std::vector<pair_node> stack;
    stack.push_back(std::move(root));

    std::vector<std::vector<pos_t>> ra1(sigma + 1), ra2(sigma + 1);
    for (auto& v : ra1) v.resize(sigma);
    for (auto& v : ra2) v.resize(sigma);
    std::vector<std::pair<sym_t, pair_node>> kids;

    while (!stack.empty()) {
        pair_node x = std::move(stack.back());
        stack.pop_back();
        if (stats) ++stats->nodes_visited;

        /* combined child boundaries; interior boundaries of non-empty
         * children get the node's string depth */
        bool first_child_seen = false;
        for (std::uint32_t c = 0; c < sigma; ++c) {
            pos_t m = x.b1[c] + x.b2[c] - 1;
            pos_t m_next = x.b1[c + 1] + x.b2[c + 1] - 1;
            if (m_next == m) continue;
            if (first_child_seen) lcp.set(m, x.depth);
            first_child_seen = true;
        }

        for (std::uint32_t j = 0; j <= sigma; ++j) {
            a.rank_all(x.b1[j], ra1[j]);
            b.rank_all(x.b2[j], ra2[j]);
        }

        kids.clear();
        for (std::uint32_t c = 1; c < sigma; ++c) {
            if (ra1[sigma][c] == ra1[0][c] && ra2[sigma][c] == ra2[0][c]) continue;
            pair_node child;
            child.depth = x.depth + 1;
            child.b1.resize(sigma + 1);
            child.b2.resize(sigma + 1);
            std::uint32_t nonzero = 0;
            for (std::uint32_t j = 0; j <= sigma; ++j) {
                child.b1[j] = ca[c] + ra1[j][c];
                child.b2[j] = cb[c] + ra2[j][c];
            }
            for (std::uint32_t j = 0; j < sigma; ++j)
                nonzero += (child.b1[j + 1] + child.b2[j + 1]) > (child.b1[j] + child.b2[j]);
            if (nonzero >= 2) kids.emplace_back(sym_t(c), std::move(child));
        }
        std::stable_sort(kids.begin(), kids.end(), [&](const auto& p, const auto& q) {
            pos_t lp = (p.second.b1[sigma] + p.second.b2[sigma]) -
                       (p.second.b1[0] + p.second.b2[0]);
            pos_t lq = (q.second.b1[sigma] + q.second.b2[sigma]) -
                       (q.second.b1[0] + q.second.b2[0]);
            if (lp != lq) return lp < lq;
            return p.first < q.first;
        });
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
            stack.push_back(std::move(it->second));
            detail::bound_stack(stack.size(), n, sigma, "merge_node_pass");
        }
        if (stats) {
            stats->stack_pushes += kids.size();
            if (stack.size() > stats->peak_stack_items) stats->peak_stack_items = stack.size();
            stats->track_aux(std::uint64_t(stack.size()) * 2 * (sigma + 1) * 64);
        }
    }
}

/* paired BGOS over the virtual union, used on large alphabets */
template <class Text>
void merge_node_pass_bgos(const Text& a, const Text& b, lcp_array& lcp,
                          traversal_stats* stats, std::optional<pos_t> queue_threshold) {
    const pos_t n = a.size() + b.size();
    pair_queue q(a.size(), b.size(), queue_threshold.value_or(hybrid_threshold(n)));

    std::vector<pos_t> cnt1(a.sigma()), cnt2(b.sigma());
    a.rank_all(a.size() + 1, cnt1);
    b.rank_all(b.size() + 1, cnt2);
    pos_t s1 = 1, s2 = 1;
    for (std::uint32_t c = 0; c < a.sigma(); ++c) {
        if (cnt1[c] + cnt2[c] > 0) {
            lcp.set(s1 + s2 - 1, 0);
            q.push({s1, s1 + cnt1[c] - 1}, {s2, s2 + cnt2[c] - 1}, 1);
        }
        s1 += cnt1[c];
        s2 += cnt2[c];
    }

    while (auto item = q.pop()) {
        get_intervals_pair(a, b, item->a, item->b, [&](sym_t, interval j1, interval j2) {
            pos_t R = j1.right + j2.right;
            if (R != n && !lcp.is_defined(R + 1)) {
                lcp.set(R + 1, item->depth);
                q.push(j1, j2, item->depth + 1);
            }
        });
    }
    if (q.total_pushes() > n + a.sigma())
        throw invariant_error("merge bgos: queue push count exceeds n + sigma");
    if (stats) {
        stats->queue_pushes += q.total_pushes();
        if (q.peak_items() > stats->peak_queue_items) stats->peak_queue_items = q.peak_items();
        stats->track_aux(q.peak_bits());
    }
}

} // namespace detail

template <class Text>
document_array merge_da(const Text& a, const Text& b,
                        container_kind kind = container_kind::automatic,
                        traversal_stats* stats = nullptr,
                        std::optional<pos_t> queue_threshold = std::nullopt) {
    detail::check_merge_inputs(a, b);
    std::vector<std::uint8_t> staged(a.size() + b.size(), 0xFF);
    detail::merge_leaf_pass(a, b, kind, staged, nullptr, stats, queue_threshold);
    return document_array(staged);
}

/* streams the merged BWT: sink(c) receives the next symbol */
template <class Sink>
void interleave(std::span<const sym_t> bwt1, std::span<const sym_t> bwt2,
                const document_array& da, Sink&& sink) {
    if (da.count0() != bwt1.size() || da.count1() != bwt2.size())
        throw std::invalid_argument("interleave: document array does not match input lengths");
    pos_t i1 = 0, i2 = 0;
    for (pos_t i = 1; i <= da.size(); ++i) sink(da[i] ? bwt2[i2++] : bwt1[i1++]);
}

inline std::vector<sym_t> interleave_to_vector(std::span<const sym_t> bwt1,
                                               std::span<const sym_t> bwt2,
                                               const document_array& da) {
    std::vector<sym_t> out;
    out.reserve(da.size());
    interleave(bwt1, bwt2, da, [&](sym_t c) { out.push_back(c); });
    return out;
}

template <class Text>
std::pair<document_array, lcp_array> merge_with_lcp(const Text& a, const Text& b,
                                                    const algo_options& opts = {},
                                                    traversal_stats* stats = nullptr) {
    detail::check_merge_inputs(a, b);
    const pos_t n = a.size() + b.size();
    lcp_array lcp(n);
    std::vector<std::uint8_t> staged(n, 0xFF);
    detail::merge_leaf_pass(a, b, opts.leaf, staged, &lcp, stats, opts.queue_threshold);

    bool use_bgos = opts.node == lcp_strategy::bgos ||
                    (opts.node == lcp_strategy::automatic && bgos_preferred(n, a.sigma()));
    if (stats) stats->node_strategy = use_bgos ? "bgos" : "stack";
    if (use_bgos)
        detail::merge_node_pass_bgos(a, b, lcp, stats, opts.queue_threshold);
    else
        detail::merge_node_pass_stack(a, b, lcp, stats);
    if (!lcp.is_defined(1)) lcp.set(1, 0);
    if (!lcp.complete()) throw invariant_error("merge_with_lcp: undefined entries remain");
    return {document_array(staged), std::move(lcp)};
}

} // namespace bwtkit

#endif
