#include "bwtkit/oracle.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace bwtkit::oracle {

namespace {

std::span<const sym_t> suffix(const collection& c, const gsa_entry& e) {
    const auto& s = c.strings[e.str - 1];
    return std::span<const sym_t>(s).subspan(e.off - 1);
}

bool suffix_less(std::span<const sym_t> a, std::span<const sym_t> b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

/* common prefix length; a matching terminator is not counted, so two
 * identical suffixes W# yield |W| */
std::uint32_t common_prefix(std::span<const sym_t> a, std::span<const sym_t> b) {
    std::uint32_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k] && a[k] != TERM) ++k;
    return k;
}

} // namespace

void validate(const collection& c) {
    if (c.strings.empty()) throw malformed_input("collection: no strings");
    if (c.sigma < 2 || c.sigma > MAX_SIGMA) throw malformed_input("collection: bad sigma");
    for (const auto& s : c.strings) {
        if (s.empty()) throw malformed_input("collection: empty string");
        if (s.back() != TERM) throw malformed_input("collection: string not terminator-ended");
        for (std::size_t i = 0; i + 1 < s.size(); ++i) {
            if (s[i] == TERM) throw malformed_input("collection: terminator inside string");
            if (std::uint32_t(s[i]) >= c.sigma) throw malformed_input("collection: code >= sigma");
        }
    }
}

collection concat(const collection& c1, const collection& c2) {
    collection u;
    u.sigma = std::max(c1.sigma, c2.sigma);
    u.strings = c1.strings;
    u.strings.insert(u.strings.end(), c2.strings.begin(), c2.strings.end());
    return u;
}

std::vector<gsa_entry> naive_gsa(const collection& c) {
    validate(c);
    std::vector<gsa_entry> out;
    for (std::uint32_t j = 0; j < c.strings.size(); ++j)
        for (std::uint32_t k = 0; k < c.strings[j].size(); ++k)
            out.push_back({j + 1, k + 1});
    std::sort(out.begin(), out.end(), [&](const gsa_entry& a, const gsa_entry& b) {
        auto sa = suffix(c, a), sb = suffix(c, b);
        if (suffix_less(sa, sb)) return true;
        if (suffix_less(sb, sa)) return false;
        return a.str < b.str; // equal suffixes: break ties by input position
    });
    return out;
}

std::vector<std::uint32_t> naive_lcp(const collection& c) {
    auto gsa = naive_gsa(c);
    std::vector<std::uint32_t> lcp(gsa.size(), 0);
    for (std::size_t i = 1; i < gsa.size(); ++i)
        lcp[i] = common_prefix(suffix(c, gsa[i - 1]), suffix(c, gsa[i]));
    return lcp;
}

std::vector<sym_t> naive_bwt(const collection& c) {
    auto gsa = naive_gsa(c);
    std::vector<sym_t> out;
    out.reserve(gsa.size());
    for (const auto& e : gsa) {
        const auto& s = c.strings[e.str - 1];
        out.push_back(e.off > 1 ? s[e.off - 2] : s.back()); // wrap to the terminator
    }
    return out;
}

std::vector<std::uint8_t> naive_da(const collection& c1, const collection& c2) {
    validate(c1);
    validate(c2);
    struct tagged {
        std::span<const sym_t> suf;
        std::uint8_t coll;
        std::uint32_t str;
    };
    std::vector<tagged> all;
    auto add = [&](const collection& c, std::uint8_t tag) {
        for (std::uint32_t j = 0; j < c.strings.size(); ++j)
            for (std::uint32_t k = 0; k < c.strings[j].size(); ++k)
                all.push_back({std::span<const sym_t>(c.strings[j]).subspan(k), tag, j});
    };
    add(c1, 0);
    add(c2, 1);
    std::sort(all.begin(), all.end(), [](const tagged& a, const tagged& b) {
        if (suffix_less(a.suf, b.suf)) return true;
        if (suffix_less(b.suf, a.suf)) return false;
        if (a.coll != b.coll) return a.coll < b.coll; // C1 suffixes first on ties
        return a.str < b.str;
    });
    std::vector<std::uint8_t> da;
    da.reserve(all.size());
    for (const auto& t : all) da.push_back(t.coll);
    return da;
}

namespace {

/* shared machinery: boundary -> run of suffixes sharing a prefix of
 * the boundary's LCP depth */
std::vector<rm_node> boundary_nodes(const collection& c, bool node_type_only) {
    auto gsa = naive_gsa(c);
    auto lcp = naive_lcp(c);
    pos_t n = gsa.size();
    std::set<rm_node> nodes;
    if (n >= 1) nodes.insert({interval{1, n}, 0}); // root, visited unconditionally
    for (pos_t i = 2; i <= n; ++i) {
        auto a = suffix(c, gsa[i - 2]);
        auto b = suffix(c, gsa[i - 1]);
        bool equal = a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin());
        if (node_type_only && equal) continue;
        std::uint32_t d = lcp[i - 1];
        if (d == 0) continue; // root already present
        pos_t l = i - 1, r = i;
        while (l > 1 && lcp[l - 1] >= d) --l;
        while (r < n && lcp[r] >= d) ++r;
        nodes.insert({interval{l, r}, d});
    }
    return {nodes.begin(), nodes.end()};
}

} // namespace

std::vector<rm_node> naive_right_maximal(const collection& c) {
    return boundary_nodes(c, true);
}

std::vector<interval> naive_st_internal_intervals(std::span<const sym_t> text) {
    if (text.empty()) throw malformed_input("oracle: empty text");
    std::uint32_t sigma = 2;
    pos_t terms = 0;
    for (sym_t s : text) {
        sigma = std::max<std::uint32_t>(sigma, s + 1);
        terms += s == TERM;
    }
    if (terms != 1 || text.back() != TERM)
        throw malformed_input("oracle: not a single terminator-ended text");
    collection c;
    c.sigma = sigma;
    c.strings.push_back({text.begin(), text.end()});
    std::vector<interval> out;
    if (text.size() < 2) return out;
    for (const auto& nd : boundary_nodes(c, true)) out.push_back(nd.iv);
    return out;
}

std::vector<std::uint8_t> node_type_positions(const collection& c) {
    auto gsa = naive_gsa(c);
    std::vector<std::uint8_t> flags(gsa.size() + 1, 0);
    flags[1] = 1;
    for (std::size_t i = 2; i <= gsa.size(); ++i) {
        auto a = suffix(c, gsa[i - 2]);
        auto b = suffix(c, gsa[i - 1]);
        bool equal = a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin());
        flags[i] = equal ? 0 : 1;
    }
    return flags;
}

} // namespace bwtkit::oracle
