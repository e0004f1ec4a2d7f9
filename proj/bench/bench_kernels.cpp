// Serial reference vs OpenMP kernels.
//   bench_kernels --benchmark_filter=Loewner

#include <benchmark/benchmark.h>

#include "su2est/oracle.hpp"
#include "su2est/qutrit_estimation.hpp"
#include "su2est/scan.hpp"

using namespace su2est;

namespace {

const EncodingConfig kCfg = EncodingConfig::planar(1.2, 0.7, -0.4);
const WeightMatrix kW(1.0, 0.2, 1.0);

void BM_QubitGridSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(grid_search_qubit_serial(kCfg, kW, static_cast<int>(st.range(0))));
}
void BM_QubitGridParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(grid_search_qubit(kCfg, kW, static_cast<int>(st.range(0))));
}

void BM_QutritGridSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(grid_search_qutrit_serial(kCfg, kW, static_cast<int>(st.range(0))));
}
void BM_QutritGridParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(grid_search_qutrit(kCfg, kW, static_cast<int>(st.range(0))));
}

void BM_LoewnerSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(loewner_dominance_scan_serial(st.range(0), 1));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}
void BM_LoewnerParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(loewner_dominance_scan(st.range(0), 1));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

ScanSpec qutrit_spec(int steps) {
  ScanSpec s;
  s.model = Model::qutrit;
  s.steps = steps;
  return s;
}

void BM_ThetaScanSerial(benchmark::State& st) {
  const ScanSpec s = qutrit_spec(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(theta_scan_serial(s));
}
void BM_ThetaScanParallel(benchmark::State& st) {
  const ScanSpec s = qutrit_spec(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(theta_scan(s));
}

}  // namespace

BENCHMARK(BM_QubitGridSerial)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QubitGridParallel)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_QutritGridSerial)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QutritGridParallel)->Arg(20)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_LoewnerSerial)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LoewnerParallel)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ThetaScanSerial)->Arg(181)->Arg(1801)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ThetaScanParallel)->Arg(181)->Arg(1801)->Unit(benchmark::kMicrosecond)->UseRealTime();

BENCHMARK_MAIN();
