#include <benchmark/benchmark.h>

#include "skewpath/schur.hpp"
#include "skewpath/spectra.hpp"

using namespace skewpath;

namespace {

const SkewDiagram kFigure(Partition({5, 4, 4, 1}), Partition({4, 3, 2}));

void BM_SchurEnumerative(benchmark::State& state) {
  RingContext ctx{static_cast<int>(state.range(0)), false};
  for (auto _ : state) benchmark::DoNotOptimize(schur_enumerative(kFigure, ctx));
}
BENCHMARK(BM_SchurEnumerative)->DenseRange(2, 4);

void BM_SchurJacobiTrudi(benchmark::State& state) {
  RingContext ctx{static_cast<int>(state.range(0)), false};
  for (auto _ : state) benchmark::DoNotOptimize(schur_jacobi_trudi(kFigure, ctx));
}
BENCHMARK(BM_SchurJacobiTrudi)->DenseRange(2, 4);

void BM_BorderStripDeterminant(benchmark::State& state) {
  RingContext ctx{3, false};
  std::vector<int> cols(static_cast<std::size_t>(state.range(0)), 2);
  BorderStrip bs(cols);
  for (auto _ : state) benchmark::DoNotOptimize(schur_border_strip_det(bs, ctx));
}
BENCHMARK(BM_BorderStripDeterminant)->DenseRange(2, 6, 2);

void BM_FiberCharacter(benchmark::State& state) {
  SpectrumPoint h(3, {2, 1, 2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(chi_fiber(h));
}
BENCHMARK(BM_FiberCharacter);

}  // namespace
