/*
 * node_repr.hpp
 *
 * Suffix-tree node representation <first_W, |W|> and the Weiner-link
 * step. first_W holds the start of every non-empty child range in
 * ascending order plus an exclusive end entry right(W)+1, so
 * range(W . chars[i]) = <first[i], first[i+1]-1> and
 * range(W) = <first.front(), first.back()-1>. chars_W itself is not
 * stored; the Weiner step never needs the child labels.
 *
 * A node is right-maximal iff it has at least two children, i.e.
 * first.size() >= 3.
 */

#ifndef BWTKIT_NODE_REPR_HPP_
#define BWTKIT_NODE_REPR_HPP_

#include <algorithm>
#include <vector>

#include "common.hpp"

namespace bwtkit {

struct node_repr {
    std::vector<pos_t> first; // strictly ascending, last entry exclusive
    pos_t depth = 0;

    std::size_t children() const { return first.size() - 1; }
    bool right_maximal() const { return first.size() >= 3; }
    interval range() const { return {first.front(), first.back() - 1}; }

    friend bool operator==(const node_repr&, const node_repr&) = default;
};

struct weiner_link {
    sym_t sym;
    node_repr node;
};

/* scratch reused across weiner calls by the enumerator */
struct weiner_scratch {
    std::vector<std::vector<pos_t>> ranks; // rank_all at each child boundary
    std::vector<pos_t> c_arr;              // C[c] for every c
    std::vector<weiner_link> links;
};

/* root representation: one child per occurring symbol, exclusive end n+1 */
template <class Text>
node_repr root_repr(const Text& st) {
    node_repr r;
    r.depth = 0;
    std::vector<pos_t> counts(st.sigma());
    st.rank_all(st.size() + 1, counts);
    pos_t start = 1;
    for (std::uint32_t c = 0; c < st.sigma(); ++c) {
        if (counts[c] > 0) r.first.push_back(start);
        start += counts[c];
    }
    r.first.push_back(st.size() + 1);
    return r;
}

/* Weiner step: representations of the right-maximal left-extensions cW
 * of the node's string W. Child boundaries come from the formula
 * range(cWa) = <C[c] + rank_c(left(Wa)), C[c] + rank_c(right(Wa)+1) - 1>,
 * evaluated through one rank_all per child boundary of W. Results are
 * appended to scratch.links in ascending symbol order. */
template <class Text>
void weiner_into(const Text& st, const node_repr& x, weiner_scratch& s) {
    const std::uint32_t sigma = st.sigma();
    const std::size_t k = x.children();
    s.links.clear();
    if (s.c_arr.size() != sigma) {
        s.c_arr.resize(sigma);
        for (std::uint32_t c = 0; c < sigma; ++c) s.c_arr[c] = st.c_array(sym_t(c));
    }
    if (s.ranks.size() < k + 1) s.ranks.resize(k + 1);
    for (std::size_t j = 0; j <= k; ++j) {
        s.ranks[j].resize(sigma);
        st.rank_all(x.first[j], s.ranks[j]);
    }
    for (std::uint32_t c = 1; c < sigma; ++c) { // never extend with the terminator
        if (s.ranks[k][c] == s.ranks[0][c]) continue;
        node_repr child;
        child.depth = x.depth + 1;
        for (std::size_t j = 0; j < k; ++j)
            if (s.ranks[j + 1][c] > s.ranks[j][c])
                child.first.push_back(s.c_arr[c] + s.ranks[j][c]);
        child.first.push_back(s.c_arr[c] + s.ranks[k][c]);
        if (child.right_maximal()) s.links.push_back({sym_t(c), std::move(child)});
    }
}

template <class Text>
std::vector<weiner_link> weiner(const Text& st, const node_repr& x) {
    weiner_scratch s;
    weiner_into(st, x, s);
    return std::move(s.links);
}

/* push order shared by the stack traversals: ascending (length, symbol),
 * then pushed back-to-front so the smallest range ends on top */
inline void sort_for_stack(std::vector<weiner_link>& links) {
    std::stable_sort(links.begin(), links.end(), [](const weiner_link& a, const weiner_link& b) {
        pos_t la = a.node.range().length(), lb = b.node.range().length();
        if (la != lb) return la < lb;
        return a.sym < b.sym;
    });
}

} // namespace bwtkit

#endif
