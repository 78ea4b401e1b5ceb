#include <benchmark/benchmark.h>

#include <vector>

#include "freefusion/annular.hpp"
#include "freefusion/free_product.hpp"
#include "freefusion/gallery.hpp"
#include "freefusion/ncp.hpp"

using namespace freefusion;

namespace {

const FreeProduct& fib_pair() {
    static const FreeProduct fp(fibonacci_ring(), fibonacci_ring());
    return fp;
}

const FreeProduct& ladder_pair() {
    static const FreeProduct fp(tlj_ring(6), tlj_ring(6));
    return fp;
}

void BM_FuseWords(benchmark::State& state) {
    const FreeProduct& fp = ladder_pair();
    const auto words = fp.enumerate_words(int(state.range(0)), WordFilter::All);
    for (auto _ : state) {
        for (const Word& a : words)
            for (const Word& b : words) benchmark::DoNotOptimize(fp.fuse_words(a, b));
    }
    state.SetItemsProcessed(std::int64_t(state.iterations()) *
                            std::int64_t(words.size() * words.size()));
}
BENCHMARK(BM_FuseWords)->Arg(2)->Arg(3);

void BM_TubeDim(benchmark::State& state) {
    const FreeProduct& fp = fib_pair();
    const auto weights = fp.enumerate_words(4, WordFilter::Lambda);
    const auto annuli = fp.enumerate_words(int(state.range(0)), WordFilter::All);
    for (auto _ : state) {
        for (const Word& v : annuli)
            for (const Word& b : weights)
                for (const Word& c : weights) benchmark::DoNotOptimize(tube_dim(fp, v, b, c));
    }
}
BENCHMARK(BM_TubeDim)->Arg(4)->Arg(6);

void BM_EnumerateWords(benchmark::State& state) {
    const FreeProduct& fp = ladder_pair();
    for (auto _ : state)
        benchmark::DoNotOptimize(fp.enumerate_words(int(state.range(0)), WordFilter::All));
}
BENCHMARK(BM_EnumerateWords)->Arg(4)->Arg(6);

void BM_EnumerateNcps(benchmark::State& state) {
    const FreeProduct& fp = fib_pair();
    const std::vector<Letter> sigma(std::size_t(state.range(0)), Letter{Side::C, 1});
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_ncps(fp, sigma, sigma));
}
BENCHMARK(BM_EnumerateNcps)->Arg(3)->Arg(5);

void BM_WClassCounts(benchmark::State& state) {
    const FreeProduct fp(*builtin_ring("s3"), *builtin_ring("d4"));
    for (auto _ : state) benchmark::DoNotOptimize(wclass_counts(fp, int(state.range(0))));
}
BENCHMARK(BM_WClassCounts)->Arg(3)->Arg(4);

void BM_LemmaScan(benchmark::State& state) {
    const FreeProduct& fp = fib_pair();
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_lemma(fp, Lemma::Equiv, int(state.range(0)),
                                              int(state.range(0)) + 2));
}
BENCHMARK(BM_LemmaScan)->Arg(4)->Arg(6);

} // namespace

BENCHMARK_MAIN();
