/*
 * acceptance.cpp
 *
 * End-to-end acceptance suite. Each criterion prints one PASS/FAIL
 * line; the exit code is the number of failed criteria.
 *
 *  1  LCP oracle equivalence on >= 1000 random collections, both
 *     forced strategies
 *  2  the fixed instance: BWT "annb#aa" -> LCP [0,0,1,3,0,0,2]
 *  3  merge oracle equivalence on >= 1000 random pairs (+ fixed
 *     instance), both container strategies, interleave included
 *  4  merge_with_lcp: DA matches merge_da, LCP matches the oracle
 *  5  node and suffix-tree-interval enumeration vs oracle on >= 500
 *     random single texts
 *  6  space-discipline monitors observed during the criterion 1/3 runs
 *  7  criteria 1-4 rerun with the queue representation switch forced
 *     to 2 (bitvector layers, empty-side reconstruction included)
 *  8  packed vs wavelet backend equivalence on random DNA
 *  9  perf smoke: LCP induction over a 16 MiB DNA BWT under 120 s with
 *     auxiliary memory below 2n bits
 */

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bwtkit/lcp.hpp"
#include "bwtkit/merge.hpp"
#include "bwtkit/oracle.hpp"
#include "bwtkit/packed_text.hpp"
#include "bwtkit/traversal.hpp"
#include "bwtkit/wavelet_tree.hpp"

using namespace bwtkit;
using clock_type = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int id, const std::string& desc, bool ok, const std::string& extra = "") {
    std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", id, desc.c_str(),
                extra.empty() ? "" : " -- ", extra.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

oracle::collection random_collection(std::mt19937& rng, std::uint32_t sigma,
                                     std::uint32_t max_strings, std::uint32_t max_content) {
    std::uniform_int_distribution<std::uint32_t> nstr(1, max_strings);
    std::uniform_int_distribution<std::uint32_t> len(0, max_content);
    std::uniform_int_distribution<std::uint32_t> sym(1, sigma - 1);
    oracle::collection c;
    c.sigma = sigma;
    std::uint32_t m = nstr(rng);
    for (std::uint32_t i = 0; i < m; ++i) {
        std::vector<sym_t> s;
        std::uint32_t l = len(rng);
        for (std::uint32_t j = 0; j < l; ++j) s.push_back(sym_t(sym(rng)));
        s.push_back(TERM);
        c.strings.push_back(std::move(s));
    }
    return c;
}

constexpr std::uint32_t SIGMAS[4] = {2, 4, 8, 26};

struct monitors {
    bool stack_bound = true;
    bool push_budget = true;
    bool leaf_cover = true;
    bool write_once = true; // a violation throws invariant_error
    std::uint64_t runs = 0;
};

struct outcome {
    bool ok = true;
    std::string note;

    void fail(const std::string& msg) {
        if (ok) note = msg;
        ok = false;
    }
};

/* criteria 1 and the LCP half of 7; feeds the criterion 6 monitors */
void lcp_rounds(monitors& mon, outcome& c1, outcome& c7) {
    auto t0 = clock_type::now();
    std::mt19937 rng(101);
    const int ROUNDS = 1000;
    for (int it = 0; it < ROUNDS; ++it) {
        std::uint32_t sigma = SIGMAS[it % 4];
        auto c = random_collection(rng, sigma, 40, 49); // total length <= 2000
        auto bwt = oracle::naive_bwt(c);
        auto expect = oracle::naive_lcp(c);
        wt_text st(bwt, sigma);
        try {
            traversal_stats s_stack;
            auto a = build_lcp(st, lcp_strategy::bgos);
            auto b = build_lcp(st, lcp_strategy::stack, &s_stack);
            if (a.values() != expect || b.values() != expect)
                c1.fail("oracle mismatch at round " + std::to_string(it));

            std::uint64_t bound = std::uint64_t(sigma) * (ceil_log2(st.size()) + 1);
            if (s_stack.peak_stack_items > bound) mon.stack_bound = false;

            traversal_stats s_bgos;
            lcp_array node_only(st.size());
            bgos(st, node_only, &s_bgos);
            if (s_bgos.queue_pushes > st.size() + sigma) mon.push_budget = false;

            if (it % 20 == 0) { // sampled explicit disjoint-cover check
                std::vector<std::uint8_t> hit(st.size() + 1, 0);
                pos_t total = 0;
                bool disjoint = true;
                enumerate_leaves(st, container_kind::stack, [&](leaf_item l) {
                    for (pos_t i = l.iv.left; i <= l.iv.right; ++i) {
                        if (hit[i]) disjoint = false;
                        hit[i] = 1;
                    }
                    total += l.iv.length();
                });
                if (!disjoint || total != st.size()) mon.leaf_cover = false;
            }
            ++mon.runs;

            algo_options forced;
            forced.node = lcp_strategy::bgos; // queue paths with bitvector layers
            forced.queue_threshold = 2;
            if (build_lcp(st, forced).values() != expect)
                c7.fail("lcp mismatch at round " + std::to_string(it));
            forced.node = lcp_strategy::stack;
            forced.leaf = container_kind::queue;
            if (build_lcp(st, forced).values() != expect)
                c7.fail("lcp (stack nodes, queue leaves) mismatch at round " +
                        std::to_string(it));
        } catch (const invariant_error& e) {
            mon.write_once = false;
            c1.fail(std::string("invariant violation: ") + e.what());
            return;
        } catch (const std::exception& e) {
            c1.fail(std::string("exception: ") + e.what());
            c7.fail(c1.note);
            return;
        }
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "%d collections x 4 strategy mixes in %.1f s", ROUNDS,
                  seconds_since(t0));
    if (c1.ok) c1.note = buf;
}

/* criteria 3, 4 and the merge half of 7; feeds the criterion 6 monitors */
void merge_rounds(monitors& mon, outcome& c3, outcome& c4, outcome& c7) {
    auto t0 = clock_type::now();
    std::mt19937 rng(202);
    const int ROUNDS = 1000;

    /* fixed instance first */
    {
        std::vector<sym_t> b1 = {2, 0, 1}; // C#A over {#,A,C}
        std::vector<sym_t> b2 = {1, 0};    // A#
        wt_text t1(b1, 3), t2(b2, 3);
        auto da = merge_da(t1, t2);
        if (da.to_bytes() != std::vector<std::uint8_t>{0, 1, 1, 0, 0})
            c3.fail("fixed instance DA mismatch");
        auto merged = interleave_to_vector(b1, b2, da);
        if (merged != std::vector<sym_t>{2, 1, 0, 0, 1}) // CA##A
            c3.fail("fixed instance merged BWT mismatch");
    }

    for (int it = 0; it < ROUNDS; ++it) {
        std::uint32_t sigma = SIGMAS[it % 4];
        auto ca = random_collection(rng, sigma, 20, 49);
        auto cb = random_collection(rng, sigma, 20, 49); // pair total <= 2000
        auto b1 = oracle::naive_bwt(ca);
        auto b2 = oracle::naive_bwt(cb);
        auto expect_da = oracle::naive_da(ca, cb);
        auto uni = oracle::concat(ca, cb);
        auto expect_bwt = oracle::naive_bwt(uni);
        auto expect_lcp = oracle::naive_lcp(uni);
        wt_text t1(b1, sigma), t2(b2, sigma);
        try {
            traversal_stats s_stack;
            auto da_s = merge_da(t1, t2, container_kind::stack, &s_stack);
            auto da_q = merge_da(t1, t2, container_kind::queue);
            if (da_s.to_bytes() != expect_da || da_q.to_bytes() != expect_da)
                c3.fail("DA mismatch at round " + std::to_string(it));
            if (interleave_to_vector(b1, b2, da_s) != expect_bwt)
                c3.fail("interleave mismatch at round " + std::to_string(it));

            std::uint64_t n = t1.size() + t2.size();
            std::uint64_t bound = std::uint64_t(sigma) * (ceil_log2(n) + 1);
            if (s_stack.peak_stack_items > bound) mon.stack_bound = false;
            ++mon.runs;

            auto [da_l, lcp_l] = merge_with_lcp(t1, t2);
            if (!(da_l == da_s)) c4.fail("DA differs from merge_da at round " + std::to_string(it));
            if (lcp_l.values() != expect_lcp)
                c4.fail("LCP mismatch at round " + std::to_string(it));

            /* forced bitvector pair queue, both node passes */
            if (merge_da(t1, t2, container_kind::queue, nullptr, pos_t(2)).to_bytes() !=
                expect_da)
                c7.fail("forced-threshold DA mismatch at round " + std::to_string(it));
            algo_options forced;
            forced.leaf = container_kind::queue;
            forced.node = lcp_strategy::bgos;
            forced.queue_threshold = 2;
            auto [da_f, lcp_f] = merge_with_lcp(t1, t2, forced);
            if (da_f.to_bytes() != expect_da || lcp_f.values() != expect_lcp)
                c7.fail("forced-threshold merge_with_lcp mismatch at round " +
                        std::to_string(it));
        } catch (const invariant_error& e) {
            mon.write_once = false;
            c3.fail(std::string("invariant violation: ") + e.what());
            return;
        } catch (const std::exception& e) {
            c3.fail(std::string("exception: ") + e.what());
            return;
        }
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "%d pairs x 5 strategy mixes in %.1f s", ROUNDS,
                  seconds_since(t0));
    if (c3.ok) c3.note = buf;
}

void st_enumeration_rounds(outcome& c5) {
    auto t0 = clock_type::now();
    std::mt19937 rng(303);
    const int ROUNDS = 500;
    for (int it = 0; it < ROUNDS; ++it) {
        std::uint32_t sigma = SIGMAS[it % 4];
        std::uint32_t n = 2 + rng() % 999; // n <= 1000
        std::uniform_int_distribution<std::uint32_t> sym(1, sigma - 1);
        oracle::collection c;
        c.sigma = sigma;
        std::vector<sym_t> text;
        for (std::uint32_t j = 0; j + 1 < n; ++j) text.push_back(sym_t(sym(rng)));
        text.push_back(TERM);
        c.strings.push_back(text);
        wt_text st(oracle::naive_bwt(c), sigma);
        try {
            /* exact multiset equality: repeated visits would show up */
            std::vector<oracle::rm_node> got_nodes;
            enumerate_nodes(st, [&](const node_repr& x) {
                got_nodes.push_back({x.range(), x.depth});
            });
            std::sort(got_nodes.begin(), got_nodes.end());
            if (got_nodes != oracle::naive_right_maximal(c))
                c5.fail("right-maximal set mismatch at round " + std::to_string(it));

            std::set<std::pair<pos_t, pos_t>> got_iv;
            bool dup = false;
            enumerate_st_intervals(st, [&](interval iv) {
                if (!got_iv.insert({iv.left, iv.right}).second) dup = true;
            });
            std::set<std::pair<pos_t, pos_t>> exp_iv;
            for (auto iv : oracle::naive_st_internal_intervals(text))
                exp_iv.insert({iv.left, iv.right});
            if (dup || got_iv != exp_iv)
                c5.fail("suffix-tree interval mismatch at round " + std::to_string(it));
        } catch (const std::exception& e) {
            c5.fail(std::string("exception: ") + e.what());
            return;
        }
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "%d texts in %.1f s", ROUNDS, seconds_since(t0));
    if (c5.ok) c5.note = buf;
}

void backend_rounds(outcome& c8) {
    std::mt19937 rng(404);
    for (int it = 0; it < 150; ++it) {
        std::uint32_t sigma = it % 2 ? 5 : 6; // DNA, optionally with N
        auto ca = random_collection(rng, sigma, 10, 60);
        auto cb = random_collection(rng, sigma, 10, 60);
        auto b1 = oracle::naive_bwt(ca);
        auto b2 = oracle::naive_bwt(cb);
        wt_text w1(b1, sigma), w2(b2, sigma);
        packed_text p1(b1, sigma), p2(b2, sigma);
        try {
            if (build_lcp(w1).values() != build_lcp(p1).values())
                c8.fail("LCP differs between backends at round " + std::to_string(it));
            auto dw = merge_da(w1, w2);
            auto dp = merge_da(p1, p2);
            if (!(dw == dp)) c8.fail("DA differs between backends at round " + std::to_string(it));

            std::vector<pos_t> rw(sigma), rp(sigma);
            for (pos_t i = 1; i <= w1.size() + 1; ++i) {
                w1.rank_all(i, rw);
                p1.rank_all(i, rp);
                if (rw != rp) c8.fail("rank_all differs at position " + std::to_string(i));
                for (std::uint32_t cc = 0; cc < sigma; ++cc)
                    if (rp[cc] != p1.rank(sym_t(cc), i))
                        c8.fail("rank_all != rank at position " + std::to_string(i));
            }
        } catch (const std::exception& e) {
            c8.fail(std::string("exception: ") + e.what());
            return;
        }
    }
}

void perf_smoke(outcome& c9) {
    const pos_t TARGET = pos_t(16) << 20; // 16 MiB of symbols
    std::mt19937 rng(505);
    std::uniform_int_distribution<int> base(1, 4);
    oracle::collection c;
    c.sigma = 5;
    pos_t produced = 0;
    while (produced < TARGET) {
        std::uint32_t len = std::min<pos_t>(99, TARGET - produced > 100 ? 99 : TARGET - produced - 1);
        std::vector<sym_t> s;
        s.reserve(len + 1);
        for (std::uint32_t i = 0; i < len; ++i) s.push_back(sym_t(base(rng)));
        s.push_back(TERM);
        produced += s.size();
        c.strings.push_back(std::move(s));
    }
    std::printf("  [criterion 9] building reference BWT of %llu symbols...\n",
                (unsigned long long)produced);
    std::fflush(stdout);
    auto bwt = oracle::naive_bwt(c);

    auto t0 = clock_type::now();
    packed_text st(bwt, 5);
    traversal_stats stats;
    lcp_array lcp = build_lcp(st, lcp_strategy::automatic, &stats);
    double dt = seconds_since(t0);

    bool time_ok = dt < 120.0;
    bool space_ok = stats.peak_aux_bits < 2 * st.size();
    bool complete = lcp.complete();
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "n=%llu, %.1f s (%.2f Msymbols/s), node=%s leaf=%s, aux %.3f bits/symbol",
                  (unsigned long long)st.size(), dt, double(st.size()) / dt / 1e6,
                  stats.node_strategy, stats.leaf_strategy,
                  double(stats.peak_aux_bits) / double(st.size()));
    c9.ok = time_ok && space_ok && complete;
    c9.note = buf;
}

} // namespace

int main() {
    std::printf("bwtkit acceptance suite\n");

    monitors mon;
    outcome c1, c3, c4, c5, c7, c8, c9;

    lcp_rounds(mon, c1, c7);
    report(1, "LCP oracle equivalence, both forced strategies, 1000 collections", c1.ok,
           c1.note);

    {
        std::vector<sym_t> banana = {1, 3, 3, 2, 0, 1, 1}; // annb#aa
        wt_text st(banana, 4);
        bool c2 = build_lcp(st).values() == std::vector<std::uint32_t>{0, 0, 1, 3, 0, 0, 2};
        report(2, "BWT \"annb#aa\" yields LCP [0,0,1,3,0,0,2]", c2);
    }

    merge_rounds(mon, c3, c4, c7);
    report(3, "merge_da + interleave oracle equivalence, 1000 pairs", c3.ok, c3.note);
    report(4, "merge_with_lcp matches merge_da and the oracle LCP", c4.ok, c4.note);

    st_enumeration_rounds(c5);
    report(5, "node / suffix-tree-interval enumeration vs oracle, 500 texts", c5.ok, c5.note);

    {
        bool ok = mon.stack_bound && mon.push_budget && mon.leaf_cover && mon.write_once;
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "%llu monitored runs: stack bound %s, push budget %s, leaf cover %s, "
                      "write-once %s",
                      (unsigned long long)mon.runs, mon.stack_bound ? "ok" : "VIOLATED",
                      mon.push_budget ? "ok" : "VIOLATED", mon.leaf_cover ? "ok" : "VIOLATED",
                      mon.write_once ? "ok" : "VIOLATED");
        report(6, "space-discipline invariants during criterion 1/3 runs", ok, buf);
    }

    report(7, "criteria 1-4 with queue representation switch forced to 2", c7.ok, c7.note);

    backend_rounds(c8);
    report(8, "packed-DNA and wavelet backends produce identical outputs", c8.ok, c8.note);

    perf_smoke(c9);
    report(9, "16 MiB DNA LCP induction under 120 s, aux under 2n bits", c9.ok, c9.note);

    std::printf("%s (%d/9 passed)\n", g_failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES",
                9 - g_failures);
    return g_failures;
}
