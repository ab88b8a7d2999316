#include <benchmark/benchmark.h>

#include "cpg/oracle.hpp"
#include "cpg/word_text.hpp"

namespace {

cpg::CyclicWord word_of(const char* text) { return cpg::CyclicWord(cpg::parse_word(text)); }

void BM_SmithNormalForm(benchmark::State& state) {
  const cpg::CyclicPresentationSpec p(static_cast<std::uint32_t>(state.range(0)), word_of("x0 x1^2 x2^-1 x0 x3"));
  const cpg::IntMatrix m = cpg::exponent_matrix(p);
  for (auto _ : state) benchmark::DoNotOptimize(cpg::smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(8)->Arg(16)->Arg(32);

void BM_ResultantWithUnity(benchmark::State& state) {
  const cpg::CyclicPresentationSpec p(static_cast<std::uint32_t>(state.range(0)), word_of("x0 x1^2 x2^-1 x0 x3"));
  const cpg::IntPoly f = cpg::exponent_polynomial(p);
  for (auto _ : state) benchmark::DoNotOptimize(cpg::resultant_with_unity(f, p.n()));
}
BENCHMARK(BM_ResultantWithUnity)->Arg(8)->Arg(16)->Arg(32);

void BM_ToddCoxeterHigman(benchmark::State& state) {
  const cpg::CyclicPresentationSpec p(3, word_of("x0^-1 x1 x0 x1^-2"));
  for (auto _ : state) benchmark::DoNotOptimize(cpg::todd_coxeter(p, 10000));
}
BENCHMARK(BM_ToddCoxeterHigman)->Unit(benchmark::kMillisecond);

void BM_ToddCoxeterFibonacci(benchmark::State& state) {
  const cpg::CyclicPresentationSpec p(5, word_of("x0 x1 x2^-1"));
  for (auto _ : state) benchmark::DoNotOptimize(cpg::todd_coxeter(p, 10000));
}
BENCHMARK(BM_ToddCoxeterFibonacci);

}  // namespace
