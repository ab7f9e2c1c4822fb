#include <benchmark/benchmark.h>

#include "koszul/corpus.hpp"
#include "koszul/koszul_functor.hpp"
#include "koszul/resolution.hpp"

using namespace koszul;

static void BM_Dual(benchmark::State& state) {
  QuadraticPresentation p = corpus_presentation("BEIL_2");
  for (auto _ : state) benchmark::DoNotOptimize(quadratic_dual(p));
}
BENCHMARK(BM_Dual);

static void BM_AlgebraBuild(benchmark::State& state) {
  QuadraticPresentation p = corpus_presentation("SYM2");
  for (auto _ : state) {
    AlgebraPtr a = GradedAlgebra::make(p);
    benchmark::DoNotOptimize(a->dim(0, 0, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_AlgebraBuild)->Arg(4)->Arg(8);

static void BM_Resolution(benchmark::State& state) {
  AlgebraPtr a = GradedAlgebra::make(corpus_presentation("EXT2"));
  GradedModule s = simple(a, 0, 0);
  for (auto _ : state) benchmark::DoNotOptimize(minimal_projective_resolution(s, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Resolution)->Arg(3)->Arg(6);

static void BM_ExtTable(benchmark::State& state) {
  AlgebraPtr a = GradedAlgebra::make(corpus_presentation("BEIL_2"));
  for (auto _ : state) benchmark::DoNotOptimize(ext_simple_table(a, 6));
}
BENCHMARK(BM_ExtTable);

static void BM_KFunctor(benchmark::State& state) {
  AlgebraPtr l = GradedAlgebra::make(corpus_presentation("EXT2"));
  AlgebraPtr d = dual_algebra(*l);
  GradedModule m = injective(d, 0, 0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(k_module(m, l, true));
}
BENCHMARK(BM_KFunctor)->Arg(2)->Arg(4);
BENCHMARK_MAIN();
