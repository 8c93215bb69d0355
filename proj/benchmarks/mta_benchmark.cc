#include <benchmark/benchmark.h>

#include "fixtures.hpp"
#include "mta/oracle.hpp"
#include "mta/sax.hpp"
#include "mta/series.hpp"
#include "mta/tracker.hpp"

namespace {

const mta::TimeSeries& fixture() {
  static const mta::TimeSeries series = mta::testing::planted_fixture();
  return series;
}

void BM_SymbolMatrix(benchmark::State& state) {
  const auto norm = mta::z_normalize(fixture());
  mta::SaxConfig sax{static_cast<std::size_t>(state.range(0)), 10};
  for (auto _ : state) {
    benchmark::DoNotOptimize(mta::build_symbol_matrix(norm, sax));
  }
}
BENCHMARK(BM_SymbolMatrix)->Arg(10)->Arg(20)->Arg(40);

void BM_RunMta(benchmark::State& state) {
  mta::MtaConfig config;
  config.sax = {static_cast<std::size_t>(state.range(0)), 10};
  config.tme_enabled = state.range(1) != 0;
  std::size_t motifs = 0;
  for (auto _ : state) {
    auto set = mta::run_mta(fixture(), config);
    motifs = set.size();
    benchmark::DoNotOptimize(set);
  }
  state.counters["motifs"] = static_cast<double>(motifs);
}
BENCHMARK(BM_RunMta)->ArgsProduct({{10, 20, 40}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_RunMtaThreshold(benchmark::State& state) {
  mta::MtaConfig config;
  config.sax = {10, 10};
  config.match_threshold = static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mta::run_mta(fixture(), config));
  }
}
BENCHMARK(BM_RunMtaThreshold)->Arg(0)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_BruteForceOracle(benchmark::State& state) {
  const auto granularity = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mta::oracle::brute_force_exact_motifs(fixture(), granularity));
  }
}
BENCHMARK(BM_BruteForceOracle)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
