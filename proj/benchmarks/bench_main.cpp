#include "bsym/bsymbol.hpp"
#include "bsym/distance.hpp"
#include "bsym/field.hpp"
#include "bsym/random.hpp"
#include "bsym/reed_muller.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace bsym;

void BM_FieldMul(benchmark::State& state) {
    const Field f = Field::of_order(static_cast<std::uint32_t>(state.range(0)));
    Rng rng(1);
    const Word xs = random_word(f, 1024, rng);
    FieldElement acc = f.one();
    for (auto _ : state) {
        for (auto x : xs) acc = f.add(f.mul(acc, x), x);
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
}
BENCHMARK(BM_FieldMul)->Arg(2)->Arg(9)->Arg(64)->Arg(251);

void BM_BWeightProfile(benchmark::State& state) {
    const Field f = Field::of_order(3);
    Rng rng(2);
    Word x = random_word(f, static_cast<std::size_t>(state.range(0)), rng);
    for (std::size_t i = 0; i < x.size(); i += 3) x[i] = f.zero();
    for (auto _ : state) benchmark::DoNotOptimize(b_weight_profile(x));
}
BENCHMARK(BM_BWeightProfile)->Arg(16)->Arg(256)->Arg(4096);

void BM_MinBDistances(benchmark::State& state) {
    const Field f = Field::of_order(3);
    Rng rng(3);
    const auto k = static_cast<std::size_t>(state.range(0));
    const LinearCode code = random_code(f, 2 * k, k, rng);
    const EnumerationOptions options{.cap = std::uint64_t{1} << 24, .workers = static_cast<unsigned>(state.range(1))};
    for (auto _ : state) benchmark::DoNotOptimize(min_b_distances(code, options));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(codeword_count(code)));
}
BENCHMARK(BM_MinBDistances)->Args({6, 1})->Args({10, 1})->Args({10, 4})->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_ReedMullerProfile(benchmark::State& state) {
    const RMParams params{Field::of_order(2), 2, static_cast<std::size_t>(state.range(0))};
    const LinearCode code = rm_by_evaluation(params);
    for (auto _ : state) benchmark::DoNotOptimize(profile(code));
}
BENCHMARK(BM_ReedMullerProfile)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
