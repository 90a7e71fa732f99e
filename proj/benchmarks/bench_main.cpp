/*
 * Microbenchmarks for the two text backends and the two main pipelines
 * on synthetic DNA data. Run with --benchmark_filter=... to select.
 */

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "bwtkit/lcp.hpp"
#include "bwtkit/merge.hpp"
#include "bwtkit/oracle.hpp"
#include "bwtkit/packed_text.hpp"
#include "bwtkit/wavelet_tree.hpp"

using namespace bwtkit;

namespace {

/* BWT of a synthetic read collection (real BWT, so the traversals
 * behave like they do on genuine inputs) */
std::vector<sym_t> dna_bwt(pos_t total, std::uint32_t read_len, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> base(1, 4);
    oracle::collection c;
    c.sigma = 5;
    pos_t produced = 0;
    while (produced < total) {
        std::uint32_t len = std::min<pos_t>(read_len, total - produced ? read_len : read_len);
        std::vector<sym_t> s;
        s.reserve(len + 1);
        for (std::uint32_t i = 0; i < len; ++i) s.push_back(sym_t(base(rng)));
        s.push_back(TERM);
        produced += s.size();
        c.strings.push_back(std::move(s));
    }
    return oracle::naive_bwt(c);
}

const std::vector<sym_t>& shared_bwt() {
    static std::vector<sym_t> b = dna_bwt(1 << 20, 100, 7);
    return b;
}

} // namespace

template <class Text>
static void BM_rank(benchmark::State& state) {
    Text t(shared_bwt(), 5);
    std::mt19937_64 rng(13);
    for (auto _ : state) {
        pos_t i = rng() % t.size() + 1;
        benchmark::DoNotOptimize(t.rank(sym_t(1 + i % 4), i));
    }
}
BENCHMARK(BM_rank<wt_text>);
BENCHMARK(BM_rank<packed_text>);

template <class Text>
static void BM_rank_all(benchmark::State& state) {
    Text t(shared_bwt(), 5);
    std::mt19937_64 rng(13);
    std::vector<pos_t> out(t.sigma());
    for (auto _ : state) {
        t.rank_all(rng() % t.size() + 1, out);
        benchmark::DoNotOptimize(out.data());
    }
}
BENCHMARK(BM_rank_all<wt_text>);
BENCHMARK(BM_rank_all<packed_text>);

template <class Text>
static void BM_access(benchmark::State& state) {
    Text t(shared_bwt(), 5);
    std::mt19937_64 rng(13);
    for (auto _ : state) benchmark::DoNotOptimize(t.access(rng() % t.size() + 1));
}
BENCHMARK(BM_access<wt_text>);
BENCHMARK(BM_access<packed_text>);

template <class Text>
static void BM_build_lcp(benchmark::State& state) {
    Text t(shared_bwt(), 5);
    for (auto _ : state) {
        lcp_array lcp = build_lcp(t);
        benchmark::DoNotOptimize(lcp.size());
    }
    state.SetBytesProcessed(std::int64_t(state.iterations()) * std::int64_t(t.size()));
}
BENCHMARK(BM_build_lcp<wt_text>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_build_lcp<packed_text>)->Unit(benchmark::kMillisecond);

static void BM_merge_da(benchmark::State& state) {
    static std::vector<sym_t> b1 = dna_bwt(1 << 19, 100, 11);
    static std::vector<sym_t> b2 = dna_bwt(1 << 19, 100, 12);
    packed_text t1(b1, 5), t2(b2, 5);
    for (auto _ : state) {
        document_array da = merge_da(t1, t2);
        benchmark::DoNotOptimize(da.size());
    }
    state.SetBytesProcessed(std::int64_t(state.iterations()) *
                            std::int64_t(t1.size() + t2.size()));
}
BENCHMARK(BM_merge_da)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
