#include <benchmark/benchmark.h>

#include "wlab/decimation.hpp"
#include "wlab/energy.hpp"
#include "wlab/geometry.hpp"
#include "wlab/params.hpp"
#include "wlab/spectral.hpp"

namespace {

const wlab::WeierstrassParams& params() {
  static const wlab::WeierstrassParams p = wlab::make_params(0.5, 3);
  return p;
}

void BM_VertexChain(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wlab::vertex_chain(params(), m));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(wlab::chain_vertex_count(3, m)));
}
BENCHMARK(BM_VertexChain)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_DirectSpectrum(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wlab::direct_spectrum(params(), m));
}
BENCHMARK(BM_DirectSpectrum)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

void BM_DenseSpectrum(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wlab::direct_spectrum(params(), m, {}, wlab::EigenMethod::dense));
  }
}
BENCHMARK(BM_DenseSpectrum)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_DecimationTree(benchmark::State& state) {
  const int depth = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wlab::decimation_tree(params(), depth));
}
BENCHMARK(BM_DecimationTree)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_BoxCount(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wlab::box_count(params(), m, 1));
}
BENCHMARK(BM_BoxCount)->DenseRange(3, 7, 2)->Unit(benchmark::kMillisecond);

void BM_Resistance(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const std::size_t last = wlab::chain_vertex_count(3, m) - 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(wlab::resistance(params(), m, 0, last, wlab::Normalization::paper));
  }
}
BENCHMARK(BM_Resistance)->DenseRange(4, 8, 2)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
