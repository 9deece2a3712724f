#include <benchmark/benchmark.h>

#include "skewpath/characters.hpp"
#include "skewpath/twisted.hpp"

using namespace skewpath;

namespace {

void BM_Level1Theta(benchmark::State& state) {
  int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(level1_theta(3, 1, order));
}
BENCHMARK(BM_Level1Theta)->DenseRange(2, 6, 2);

void BM_Level1Decomposition(benchmark::State& state) {
  int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(level1_decomposition(3, 1, order, DecompositionVariant::A));
}
BENCHMARK(BM_Level1Decomposition)->DenseRange(2, 6, 2);

void BM_RogersSzego(benchmark::State& state) {
  RingContext ctx{3, false};
  int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rogers_szego(N, ctx));
}
BENCHMARK(BM_RogersSzego)->DenseRange(3, 7, 2);

void BM_FN(benchmark::State& state) {
  RingContext ctx{3, false};
  int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(F_N(N, ctx));
}
BENCHMARK(BM_FN)->DenseRange(3, 7, 2);

void BM_KostkaFoulkes(benchmark::State& state) {
  Partition lambda({3, 2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(kostka_foulkes(lambda));
}
BENCHMARK(BM_KostkaFoulkes);

void BM_TwistedDecomposition(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(twisted_decomposition(n, 5));
}
BENCHMARK(BM_TwistedDecomposition)->DenseRange(1, 2);

}  // namespace
