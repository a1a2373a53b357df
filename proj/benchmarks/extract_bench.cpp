#include <benchmark/benchmark.h>

#include <random>

#include "linex/extractor.hpp"
#include "linex/linear_code.hpp"
#include "linex/oracle.hpp"
#include "linex/reed_muller.hpp"
#include "linex/source.hpp"

namespace {

using namespace linex;

void BM_LinearExtract(benchmark::State& state) {
    const auto m = static_cast<unsigned>(state.range(0));
    const auto r = static_cast<unsigned>(state.range(1));
    const LinearExtractor extractor(rm_generator(r, m).generator());
    const auto input = generate({Bias(0.1), 1}, std::size_t{1} << 22);
    for (auto _ : state) {
        auto out = extractor.extract(input);
        benchmark::DoNotOptimize(out);
    }
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) * static_cast<std::int64_t>(input.size() / 8));
    state.counters["bits/s"] = benchmark::Counter(static_cast<double>(state.iterations()) * static_cast<double>(input.size()),
                                                  benchmark::Counter::kIsRate);
}
BENCHMARK(BM_LinearExtract)->Args({4, 2})->Args({8, 4})->Unit(benchmark::kMillisecond);

void BM_VonNeumann(benchmark::State& state) {
    const auto input = generate({Bias(0.1), 2}, std::size_t{1} << 22);
    for (auto _ : state) {
        auto out = von_neumann(input);
        benchmark::DoNotOptimize(out);
    }
    state.counters["bits/s"] = benchmark::Counter(static_cast<double>(state.iterations()) * static_cast<double>(input.size()),
                                                  benchmark::Counter::kIsRate);
}
BENCHMARK(BM_VonNeumann)->Unit(benchmark::kMillisecond);

void BM_Matvec(benchmark::State& state) {
    const auto g = rm_generator(4, 8).generator();
    std::mt19937_64 rng(3);
    BitVector x(g.cols());
    for (std::size_t j = 0; j < g.cols(); ++j) x.set(j, rng() & 1U);
    for (auto _ : state) {
        auto y = matvec(g, x);
        benchmark::DoNotOptimize(y);
    }
}
BENCHMARK(BM_Matvec);

void BM_EnumerateWeights(benchmark::State& state) {
    const auto code = rm_generator(2, static_cast<unsigned>(state.range(0)));
    for (auto _ : state) {
        auto w = enumerate_weights(code);
        benchmark::DoNotOptimize(w);
    }
}
BENCHMARK(BM_EnumerateWeights)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_ExactOracle(benchmark::State& state) {
    const auto g = rm_generator(2, 4).generator();
    for (auto _ : state) {
        auto s = exact_output_pmf(g, Bias(0.2));
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_ExactOracle)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
