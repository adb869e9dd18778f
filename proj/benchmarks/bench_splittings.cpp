#include <benchmark/benchmark.h>

#include "coxsplit/corpus.hpp"
#include "coxsplit/gog.hpp"
#include "coxsplit/measure.hpp"
#include "coxsplit/splittings.hpp"

using namespace coxsplit;

namespace {
const char* kSystems[] = {"sysA", "sysB", "sysC", "sysD"};
}

static void BM_enumerate_separators(benchmark::State& state) {
    auto sys = corpus_system(kSystems[state.range(0)]);
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_separators(sys));
    }
}
BENCHMARK(BM_enumerate_separators)->DenseRange(0, 3);

static void BM_classify_minimal(benchmark::State& state) {
    auto sys = corpus_system(kSystems[state.range(0)]);
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify_minimal(sys));
    }
}
BENCHMARK(BM_classify_minimal)->DenseRange(0, 3);

static void BM_enumerate_k(benchmark::State& state) {
    auto sys = corpus_system(kSystems[state.range(0)]);
    WordEngine engine(sys);
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_k(engine, true));
    }
}
BENCHMARK(BM_enumerate_k)->DenseRange(0, 3);

static void BM_decompose(benchmark::State& state) {
    auto sys = corpus_system(kSystems[state.range(0)]);
    for (auto _ : state) {
        benchmark::DoNotOptimize(decompose(sys));
    }
}
BENCHMARK(BM_decompose)->DenseRange(0, 3);

static void BM_measure_trivial(benchmark::State& state) {
    auto sys = corpus_system(kSystems[state.range(0)]);
    WordEngine engine(sys);
    for (auto _ : state) {
        Measure m(engine);
        benchmark::DoNotOptimize(m.c_of(trivial_gog(sys)));
    }
}
BENCHMARK(BM_measure_trivial)->DenseRange(0, 3);

static void BM_certify_decomposition(benchmark::State& state) {
    auto sys = corpus_system(kSystems[state.range(0)]);
    WordEngine engine(sys);
    auto trace = decompose(sys).trace;
    for (auto _ : state) {
        Measure m(engine);
        benchmark::DoNotOptimize(m.certify_sequence(trace));
    }
}
BENCHMARK(BM_certify_decomposition)->DenseRange(0, 3);
