/*
 * oracle.hpp
 *
 * Brute-force reference implementations of the generalized suffix
 * array, LCP array, BWT, document array and suffix-tree structure.
 * Quadratic-ish time is fine: these are the ground truth for every
 * property test and the source of frozen expected values. Keep them
 * dumb and obviously correct.
 */

#ifndef BWTKIT_ORACLE_HPP_
#define BWTKIT_ORACLE_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "common.hpp"

namespace bwtkit::oracle {

/* ordered multiset of strings, each ending with exactly one terminator
 * (code 0) at the last position */
struct collection {
    std::vector<std::vector<sym_t>> strings;
    std::uint32_t sigma = 0;

    pos_t total_length() const {
        pos_t n = 0;
        for (const auto& s : strings) n += s.size();
        return n;
    }
};

/* throws malformed_input if the collection invariants do not hold */
void validate(const collection& c);

/* C1 followed by C2, sigma = max */
collection concat(const collection& c1, const collection& c2);

struct gsa_entry {
    std::uint32_t str; // 1-based string index
    std::uint32_t off; // 1-based suffix start

    friend bool operator==(const gsa_entry&, const gsa_entry&) = default;
};

/* all suffixes sorted; terminator smallest, ties by string index */
std::vector<gsa_entry> naive_gsa(const collection& c);

/* LCP[1] = 0; equal suffixes W# count |W| (terminator excluded) */
std::vector<std::uint32_t> naive_lcp(const collection& c);

std::vector<sym_t> naive_bwt(const collection& c);

/* 0 where the i-th smallest suffix of the union comes from c1;
 * ties are first-collection-first */
std::vector<std::uint8_t> naive_da(const collection& c1, const collection& c2);

/* SA intervals of the internal suffix-tree nodes of a single
 * terminator-ended text (root <1,n> included when n >= 2), sorted */
std::vector<interval> naive_st_internal_intervals(std::span<const sym_t> text);

struct rm_node {
    interval iv;
    pos_t depth;

    friend bool operator==(const rm_node&, const rm_node&) = default;
    friend auto operator<=>(const rm_node& a, const rm_node& b) {
        if (auto c = a.iv.left <=> b.iv.left; c != 0) return c;
        if (auto c = a.iv.right <=> b.iv.right; c != 0) return c;
        return a.depth <=> b.depth;
    }
};

/* right-maximal substrings of the collection with their GSA intervals
 * and string depths; the empty string (root) is always included,
 * matching the enumeration algorithm's contract. Sorted. */
std::vector<rm_node> naive_right_maximal(const collection& c);

/* flags[i] (1-based) = 1 iff LCP[i] is of node type (adjacent suffixes
 * distinct); position 1 is reported as node type */
std::vector<std::uint8_t> node_type_positions(const collection& c);

} // namespace bwtkit::oracle

#endif
