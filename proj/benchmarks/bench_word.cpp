#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "coxsplit/corpus.hpp"
#include "coxsplit/word_engine.hpp"

using namespace coxsplit;

namespace {

std::vector<Word> word_pool(const CoxeterSystem& sys, int length, std::size_t count) {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> letter(0, sys.rank() - 1);
    std::vector<Word> pool(count);
    for (auto& w : pool)
        for (int i = 0; i < length; ++i) w.push_back(static_cast<std::uint8_t>(letter(rng)));
    return pool;
}

}  // namespace

static void BM_reduce_memoized(benchmark::State& state) {
    auto sys = corpus_system("a3");
    WordEngine engine(sys);
    auto pool = word_pool(sys, static_cast<int>(state.range(0)), 512);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(engine.reduce(pool[i++ % pool.size()]));
    }
}
BENCHMARK(BM_reduce_memoized)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

static void BM_reduce_fresh(benchmark::State& state) {
    auto sys = corpus_system("a3");
    auto pool = word_pool(sys, static_cast<int>(state.range(0)), 64);
    std::size_t i = 0;
    for (auto _ : state) {
        WordEngine engine(sys);
        benchmark::DoNotOptimize(engine.reduce(pool[i++ % pool.size()]));
    }
}
BENCHMARK(BM_reduce_fresh)->Arg(8)->Arg(16)->Arg(32);

static void BM_reduce_infinite_dihedral(benchmark::State& state) {
    auto sys = corpus_system("dinf");
    WordEngine engine(sys);
    auto pool = word_pool(sys, static_cast<int>(state.range(0)), 512);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(engine.reduce(pool[i++ % pool.size()]));
    }
}
BENCHMARK(BM_reduce_infinite_dihedral)->Arg(16)->Arg(64);

static void BM_double_coset_rep(benchmark::State& state) {
    auto sys = corpus_system("a3");
    WordEngine engine(sys);
    auto pool = word_pool(sys, 12, 256);
    Subset i01 = Subset::of({0, 1}), i12 = Subset::of({1, 2});
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(engine.min_double_coset_rep(i01, pool[i++ % pool.size()], i12));
    }
}
BENCHMARK(BM_double_coset_rep);

static void BM_enumerate_group(benchmark::State& state) {
    const char* names[] = {"a2", "b2", "a3"};
    auto sys = corpus_system(names[state.range(0)]);
    WordEngine engine(sys);
    for (auto _ : state) {
        benchmark::DoNotOptimize(engine.enumerate_group(sys.full_set()));
    }
}
BENCHMARK(BM_enumerate_group)->Arg(0)->Arg(1)->Arg(2);

static void BM_enumerate_ball(benchmark::State& state) {
    auto sys = corpus_system("sysD");
    WordEngine engine(sys);
    for (auto _ : state) {
        benchmark::DoNotOptimize(engine.enumerate_ball(sys.full_set(), static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_enumerate_ball)->Arg(2)->Arg(4)->Arg(6);

BENCHMARK_MAIN();
