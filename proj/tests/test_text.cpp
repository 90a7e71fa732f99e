#include <doctest.h>

#include <atomic>
#include <map>
#include <random>
#include <set>
#include <thread>

#include "bwtkit/packed_text.hpp"
#include "bwtkit/wavelet_tree.hpp"
#include "test_util.hpp"

using namespace bwtkit;
using namespace testutil;

namespace {

/* "annb#aa" with codes #=0 a=1 b=2 n=3 */
const coded_text BANANA = text_codes("annb#aa");
/* "CA##A" with codes #=0 A=1 C=2 */
const coded_text CAA = text_codes("CA##A");

template <class Text>
Text make(const coded_text& t) {
    return Text(t.codes, t.sigma);
}

} // namespace

TEST_CASE_TEMPLATE("build and access", T, wt_text, packed_text) {
    T st = make<T>(BANANA);
    CHECK(st.size() == 7);
    CHECK(st.access(4) == 2);             // 'b'
    CHECK(st.access(5) == TERM);          // '#'
    CHECK_THROWS_AS(st.access(0), std::out_of_range);
    CHECK_THROWS_AS(st.access(8), std::out_of_range);

    T single(std::vector<sym_t>{TERM}, 2);
    CHECK(single.size() == 1);
    CHECK(single.access(1) == TERM);

    /* code >= sigma and empty input are rejected */
    CHECK_THROWS_AS(T(std::vector<sym_t>{3}, 2), std::invalid_argument);
    CHECK_THROWS_AS(T(std::vector<sym_t>{}, 2), std::invalid_argument);
}

TEST_CASE_TEMPLATE("rank and rank_all", T, wt_text, packed_text) {
    T st = make<T>(BANANA);
    CHECK(st.rank(1, 1) == 0);  // 'a' before position 1
    CHECK(st.rank(1, 8) == 3);  // all 'a'
    CHECK(st.rank(3, 4) == 2);  // 'n' in [1,3]
    CHECK_THROWS_AS(st.rank(1, 0), std::out_of_range);
    CHECK_THROWS_AS(st.rank(1, 9), std::out_of_range);

    std::vector<pos_t> all(st.sigma());
    st.rank_all(8, all);
    CHECK(all == std::vector<pos_t>{1, 3, 1, 2}); // #,a,b,n
    st.rank_all(1, all);
    CHECK(all == std::vector<pos_t>{0, 0, 0, 0});

    T ca = make<T>(CAA);
    std::vector<pos_t> all3(ca.sigma());
    ca.rank_all(4, all3);
    CHECK(all3 == std::vector<pos_t>{1, 1, 1});
}

TEST_CASE_TEMPLATE("c_array", T, wt_text, packed_text) {
    T st = make<T>(BANANA);
    CHECK(st.c_array(TERM) == 1);
    CHECK(st.c_array(2) == 5); // 'b': 1 + #terminators + #a = 1+1+3
    T ca = make<T>(CAA);
    CHECK(ca.c_array(1) == 3); // 'A': 1 + two terminators
    CHECK_THROWS_AS(ca.c_array(3), std::invalid_argument);
    /* non-decreasing in c */
    for (std::uint32_t c = 1; c < st.sigma(); ++c)
        CHECK(st.c_array(sym_t(c)) >= st.c_array(sym_t(c - 1)));
}

TEST_CASE_TEMPLATE("bwsearch", T, wt_text, packed_text) {
    T st = make<T>(BANANA);
    /* range("a") = <2,4>, extension 'n' -> range("na") = <6,7> */
    CHECK(st.bwsearch({2, 4}, 3) == interval{6, 7});

    /* {AC#}: BWT "C#A"; extending range("#") with 'A' is empty with one
     * smaller suffix */
    auto cs = text_codes("C#A");
    T c(cs.codes, cs.sigma);
    CHECK(c.bwsearch({1, 1}, 1) == interval{2, 1});

    auto as = text_codes("A#");
    T a(as.codes, as.sigma);
    CHECK(a.bwsearch({1, 1}, 1) == interval{2, 2});

    /* empty input interval keeps positional meaning */
    CHECK(c.bwsearch({2, 1}, 1) == interval{2, 1});
}

TEST_CASE_TEMPLATE("range_distinct and get_intervals", T, wt_text, packed_text) {
    T st = make<T>(BANANA);
    auto rd = st.range_distinct({2, 4});
    CHECK(std::set<sym_t>(rd.begin(), rd.end()) == std::set<sym_t>{2, 3}); // {b, n}
    CHECK(st.range_distinct({5, 5}).empty());                              // only terminator
    CHECK(st.range_distinct({2, 1}).empty());                              // empty interval

    std::map<sym_t, interval> got;
    st.get_intervals({2, 4}, [&](sym_t c, interval iv) { got[c] = iv; });
    CHECK(got == std::map<sym_t, interval>{{2, {5, 5}}, {3, {6, 7}}});

    got.clear();
    st.get_intervals({5, 5}, [&](sym_t c, interval iv) { got[c] = iv; });
    CHECK(got.empty());

    got.clear();
    st.get_intervals({1, 1}, [&](sym_t c, interval iv) { got[c] = iv; });
    CHECK(got == std::map<sym_t, interval>{{1, {2, 2}}}); // (a, range("a#"))

    auto ca = make<T>(CAA);
    auto rd2 = ca.range_distinct({1, 2});
    CHECK(std::set<sym_t>(rd2.begin(), rd2.end()) == std::set<sym_t>{1, 2});
}

TEST_CASE_TEMPLATE("get_intervals_pair", T, wt_text, packed_text) {
    auto c1 = text_codes("C#A");
    auto c2s = std::string("A#");
    /* both texts over the union alphabet {#,A,C} */
    std::vector<sym_t> codes2 = {1, 0};
    T t1(c1.codes, 3), t2(codes2, 3);

    struct hit {
        sym_t c;
        interval a, b;
        bool operator==(const hit&) const = default;
    };
    std::vector<hit> got;
    get_intervals_pair(t1, t2, {1, 1}, {1, 1},
                       [&](sym_t c, interval a, interval b) { got.push_back({c, a, b}); });
    std::vector<hit> expect = {{1, {2, 1}, {2, 2}}, {2, {3, 3}, {3, 2}}};
    CHECK(got == expect);

    /* both empty -> nothing */
    got.clear();
    get_intervals_pair(t1, t2, {2, 1}, {3, 2},
                       [&](sym_t c, interval a, interval b) { got.push_back({c, a, b}); });
    CHECK(got.empty());

    /* left-extension of "C#" (present only in t1) */
    got.clear();
    get_intervals_pair(t1, t2, {3, 3}, {3, 2},
                       [&](sym_t c, interval a, interval b) { got.push_back({c, a, b}); });
    CHECK(got == std::vector<hit>{{1, {2, 2}, {3, 2}}});
}

TEST_CASE_TEMPLATE("invariants on random texts", T, wt_text, packed_text) {
    std::mt19937 rng(99);
    for (int it = 0; it < 30; ++it) {
        std::uint32_t sigma = 2 + rng() % 6;
        auto c = random_collection(rng, sigma, 6, 30);
        auto bwt = oracle::naive_bwt(c);
        T st(bwt, sigma);
        pos_t n = st.size();

        std::vector<pos_t> all(sigma);
        for (pos_t i = 1; i <= n + 1; i += 1 + (n > 300 ? 7 : 0)) {
            st.rank_all(i, all);
            pos_t sum = 0;
            for (auto v : all) sum += v;
            REQUIRE(sum == i - 1); // sum of ranks = prefix length
            for (std::uint32_t s = 0; s < sigma; ++s) REQUIRE(all[s] == st.rank(sym_t(s), i));
        }
        for (pos_t i = 1; i <= n; ++i) {
            sym_t c0 = st.access(i);
            REQUIRE(bwt[i - 1] == c0);
            REQUIRE(st.rank(c0, i + 1) == st.rank(c0, i) + 1);
        }
    }
}

TEST_CASE("bwsearch equals the oracle on random collections") {
    std::mt19937 rng(7);
    for (int it = 0; it < 25; ++it) {
        std::uint32_t sigma = 2 + rng() % 7;
        auto c = random_collection(rng, sigma, 6, 25);
        auto gsa = oracle::naive_gsa(c);
        auto bwt = oracle::naive_bwt(c);
        wt_text st(bwt, sigma);
        pos_t n = st.size();

        /* range of a pattern by brute scan over sorted suffixes */
        auto oracle_range = [&](const std::vector<sym_t>& w) {
            pos_t lo = 1, hi = 0, smaller = 0;
            bool seen = false;
            for (pos_t i = 0; i < n; ++i) {
                const auto& s = c.strings[gsa[i].str - 1];
                std::span<const sym_t> suf(s.data() + gsa[i].off - 1,
                                           s.size() - gsa[i].off + 1);
                bool pref = suf.size() >= w.size() &&
                            std::equal(w.begin(), w.end(), suf.begin());
                bool less = std::lexicographical_compare(suf.begin(), suf.end(), w.begin(),
                                                          w.end());
                if (pref && !seen) {
                    lo = i + 1;
                    seen = true;
                }
                if (pref) hi = i + 1;
                if (less && !pref) ++smaller;
            }
            return seen ? interval{lo, hi} : interval{smaller + 1, smaller};
        };

        /* random occurring substrings W, all extensions c */
        std::uniform_int_distribution<std::size_t> pick(0, c.strings.size() - 1);
        for (int t = 0; t < 20; ++t) {
            const auto& s = c.strings[pick(rng)];
            std::uniform_int_distribution<std::size_t> off(0, s.size() - 1);
            std::size_t a = off(rng), b = off(rng);
            if (a > b) std::swap(a, b);
            std::vector<sym_t> w(s.begin() + a, s.begin() + b + 1);
            if (std::find(w.begin(), w.end(), TERM) != w.end() && w.back() != TERM) continue;
            interval ivw = oracle_range(w);
            if (ivw.empty()) continue;
            /* left-extension by the terminator is never used by the
             * algorithms and has no suffix-range meaning */
            for (std::uint32_t ext = 1; ext < sigma; ++ext) {
                std::vector<sym_t> cw;
                cw.push_back(sym_t(ext));
                cw.insert(cw.end(), w.begin(), w.end());
                REQUIRE(st.bwsearch(ivw, sym_t(ext)) == oracle_range(cw));
            }
        }
    }
}

TEST_CASE("get_intervals emits exactly {(c, bwsearch(iv,c)) : c in range_distinct}") {
    std::mt19937 rng(17);
    for (int it = 0; it < 30; ++it) {
        std::uint32_t sigma = 2 + rng() % 10;
        auto c = random_collection(rng, sigma, 5, 20);
        auto bwt = oracle::naive_bwt(c);
        wt_text st(bwt, sigma);
        pos_t n = st.size();
        std::uniform_int_distribution<pos_t> lo(1, n);
        for (int t = 0; t < 15; ++t) {
            pos_t a = lo(rng), b = lo(rng);
            if (a > b) std::swap(a, b);
            interval iv{a, b};
            auto rd = st.range_distinct(iv);
            std::map<sym_t, interval> expect;
            for (sym_t cc : rd) expect[cc] = st.bwsearch(iv, cc);
            std::map<sym_t, interval> got;
            st.get_intervals(iv, [&](sym_t cc, interval jv) {
                REQUIRE(!got.count(cc));
                got[cc] = jv;
            });
            REQUIRE(got == expect);
        }
    }
}

TEST_CASE("packed and wavelet backends agree on DNA") {
    std::mt19937 rng(5);
    for (int it = 0; it < 20; ++it) {
        auto c = random_collection(rng, 5, 8, 40);
        auto bwt = oracle::naive_bwt(c);
        wt_text w(bwt, 5);
        packed_text p(bwt, 5);
        pos_t n = w.size();
        std::vector<pos_t> rw(5), rp(5);
        for (pos_t i = 1; i <= n + 1; ++i) {
            w.rank_all(i, rw);
            p.rank_all(i, rp);
            REQUIRE(rw == rp);
        }
        for (pos_t i = 1; i <= n; ++i) REQUIRE(w.access(i) == p.access(i));
        for (std::uint32_t cc = 0; cc < 5; ++cc)
            REQUIRE(w.c_array(sym_t(cc)) == p.c_array(sym_t(cc)));
    }
}

TEST_CASE_TEMPLATE("unsynchronized concurrent readers", T, wt_text, packed_text) {
    std::mt19937 rng(40);
    auto c = random_collection(rng, 5, 10, 60);
    auto bwt = oracle::naive_bwt(c);
    T st(bwt, 5);
    std::atomic<bool> ok{true};
    auto reader = [&](unsigned seed) {
        std::mt19937 r(seed);
        std::vector<pos_t> all(st.sigma());
        for (int i = 0; i < 20000; ++i) {
            pos_t p = r() % st.size() + 1;
            sym_t s = st.access(p);
            if (bwt[p - 1] != s) ok = false;
            st.rank_all(p, all);
            if (all[s] != st.rank(s, p)) ok = false;
        }
    };
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < 4; ++t) threads.emplace_back(reader, t + 1);
    for (auto& t : threads) t.join();
    CHECK(ok.load());
}

TEST_CASE("packed_text block boundaries") {
    /* length crossing several 128-symbol blocks, exact boundary cases */
    std::mt19937 rng(31);
    std::vector<sym_t> codes;
    for (int i = 0; i < 128 * 3; ++i) codes.push_back(sym_t(rng() % 6));
    codes.push_back(TERM);
    for (pos_t cut : {pos_t(127), pos_t(128), pos_t(129), pos_t(255), pos_t(256), codes.size()}) {
        std::vector<sym_t> pre(codes.begin(), codes.begin() + cut);
        if (std::find(pre.begin(), pre.end(), TERM) == pre.end()) pre.back() = TERM;
        packed_text p(pre, 6);
        wt_text w(pre, 6);
        for (pos_t i = 1; i <= p.size() + 1; ++i)
            for (std::uint32_t c = 0; c < 6; ++c) REQUIRE(p.rank(sym_t(c), i) == w.rank(sym_t(c), i));
    }
}
