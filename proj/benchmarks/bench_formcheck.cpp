#include <benchmark/benchmark.h>

#include "cpg/certify.hpp"
#include "cpg/formcheck.hpp"
#include "cpg/word_text.hpp"

namespace {

cpg::OneRelatorSpec spec_of(const char* text) { return cpg::OneRelatorSpec(cpg::CyclicWord(cpg::parse_word(text))); }

void BM_CheckPair(benchmark::State& state) {
  const auto spec = spec_of("x1^-1 x0^-1 x2 x0 x1 x2^-2");
  const auto pair = cpg::MagnusPair::from_indices(spec, {0, 2}, {1, 2});
  cpg::SearchParams params;
  params.cancellation_budget = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cpg::check_pair(pair, params));
}
BENCHMARK(BM_CheckPair)->Arg(0)->Arg(1)->Arg(2);

void BM_BruteForceOracle(benchmark::State& state) {
  const auto spec = spec_of("x1^-1 x0^-1 x2 x0 x1 x2^-2");
  const auto pair = cpg::MagnusPair::from_indices(spec, {0, 2}, {1, 2});
  cpg::SearchParams params;
  params.max_exponent = 3;
  for (auto _ : state) benchmark::DoNotOptimize(cpg::brute_force_oracle(pair, params));
}
BENCHMARK(BM_BruteForceOracle);

void BM_Certify(benchmark::State& state) {
  const auto spec = spec_of("x0 x1 x0^-1 x2 x1^-1 x3 x2 x0^-2 x3");
  for (auto _ : state) benchmark::DoNotOptimize(cpg::certify(spec));
}
BENCHMARK(BM_Certify);

}  // namespace
