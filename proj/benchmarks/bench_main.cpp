#include <benchmark/benchmark.h>

#include "deza/canonical.hpp"
#include "deza/census.hpp"
#include "deza/classify.hpp"
#include "deza/sieve.hpp"
#include "deza/spectra.hpp"

namespace {

void BM_CanonicalForm(benchmark::State& state) {
  const auto g = state.range(0) == 0 ? deza::fano_incidence() : deza::hypercube(5);
  for (auto _ : state) benchmark::DoNotOptimize(deza::canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->Arg(0)->Arg(1);

void BM_Classify(benchmark::State& state) {
  const auto g = deza::hypercube(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(deza::classify(g));
}
BENCHMARK(BM_Classify)->Arg(4)->Arg(8);

void BM_CharPoly(benchmark::State& state) {
  const auto g = deza::fano_non_incidence();
  for (auto _ : state) benchmark::DoNotOptimize(deza::char_poly(g));
}
BENCHMARK(BM_CharPoly);

void BM_GenerateRegular(benchmark::State& state) {
  const auto v = static_cast<std::size_t>(state.range(0));
  const auto k = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(deza::generate_regular(v, k));
}
BENCHMARK(BM_GenerateRegular)->Args({10, 3})->Args({10, 4})->Args({12, 3})->Unit(benchmark::kMillisecond);

void BM_SieveScan(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(deza::sieve_scan("ddg-n2", state.range(0)));
}
BENCHMARK(BM_SieveScan)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
