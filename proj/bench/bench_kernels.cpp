#include <benchmark/benchmark.h>

#include "forest_specht/config.hpp"
#include "forest_specht/enumerate.hpp"
#include "forest_specht/specht.hpp"
#include "forest_specht/tableaux.hpp"
#include "forest_specht/volume.hpp"

using namespace forest;

namespace {

BipartiteGraph bench_graph() { return make_caterpillar(3, 1); }

void lattice_parallel(benchmark::State& s) {
  auto g = bench_graph();
  for (auto _ : s) benchmark::DoNotOptimize(lattice_count(g, static_cast<int>(s.range(0))));
}
void lattice_serial(benchmark::State& s) {
  auto g = bench_graph();
  for (auto _ : s) benchmark::DoNotOptimize(lattice_count_serial(g, static_cast<int>(s.range(0))));
}

Diagram bench_diagram(int n) { return graph_to_diagram(make_path(n)); }

void specht_parallel(benchmark::State& s) {
  auto d = bench_diagram(static_cast<int>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(specht_dim_mod(d, config().primes[0], true));
}
void specht_serial(benchmark::State& s) {
  auto d = bench_diagram(static_cast<int>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(specht_dim_mod(d, config().primes[0], false));
}
void specht_reference(benchmark::State& s) {
  auto d = bench_diagram(static_cast<int>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(specht_dim_reference(d, config().primes[0]));
}

void tensor_span(benchmark::State& s) {
  auto d = bench_diagram(5);
  for (auto _ : s) benchmark::DoNotOptimize(schur_tensor_span(d, static_cast<int>(s.range(0))).dimension);
}

void ssyt(benchmark::State& s) {
  auto d = graph_to_diagram(make_caterpillar(3, 1));
  for (auto _ : s) benchmark::DoNotOptimize(ssyt_count(d, static_cast<int>(s.range(0))));
}

void volume_apm(benchmark::State& s) {
  auto g = make_path(static_cast<int>(s.range(0)));
  for (auto _ : s) {
    clear_volume_caches();
    benchmark::DoNotOptimize(v_apm(g).value);
  }
}

}  // namespace

BENCHMARK(lattice_parallel)->Arg(4)->Arg(6);
BENCHMARK(lattice_serial)->Arg(4)->Arg(6);
BENCHMARK(specht_parallel)->Arg(5)->Arg(6)->Arg(7);
BENCHMARK(specht_serial)->Arg(5)->Arg(6)->Arg(7);
BENCHMARK(specht_reference)->Arg(5)->Arg(6);
BENCHMARK(tensor_span)->Arg(2)->Arg(3);
BENCHMARK(ssyt)->Arg(3)->Arg(5);
BENCHMARK(volume_apm)->Arg(10)->Arg(20);

int main(int argc, char** argv) {
  configure_threads_from_env();
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
