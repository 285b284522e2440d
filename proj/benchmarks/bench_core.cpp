// Microbenchmarks for the hot paths: table construction, subgroup counts,
// extremal scans, brute-force enumeration, and report formatting.
// subgroup_count memoizes behind a mutex, so the uncached cost is measured
// through flag_sum_oracle and build_table instead.

#include <benchmark/benchmark.h>

#include <commperm/arith.hpp>
#include <commperm/bruteforce.hpp>
#include <commperm/count_table.hpp>
#include <commperm/exact.hpp>
#include <commperm/extremal.hpp>
#include <commperm/report.hpp>

using namespace commperm;

namespace {

void BM_BuildTable(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const long nmax = state.range(1);
  for (auto _ : state) {
    CountTable table = build_table(p, nmax);
    benchmark::DoNotOptimize(table.at(nmax, 1));
  }
}
BENCHMARK(BM_BuildTable)
    ->Args({2, 100})
    ->Args({2, 300})
    ->Args({5, 100})
    ->Args({20, 12})
    ->Args({60, 12})
    ->Unit(benchmark::kMillisecond);

void BM_FlagSum(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) {
    Int b = flag_sum_oracle(6, n);
    benchmark::DoNotOptimize(b);
  }
}
BENCHMARK(BM_FlagSum)->Arg(5040)->Arg(720720);

void BM_EScan(benchmark::State& state) {
  const long nmax = state.range(0);
  const int jobs = static_cast<int>(state.range(1));
  for (auto _ : state) {
    ScanReport report = check_e_logconcavity(nmax, jobs, [](const ScanRow&) {});
    benchmark::DoNotOptimize(report.violations);
  }
}
BENCHMARK(BM_EScan)
    ->Args({500, 1})
    ->Args({1500, 1})
    ->Args({1500, 4})
    ->Unit(benchmark::kMillisecond);

void BM_ClassifyScan(benchmark::State& state) {
  const long nmax = state.range(0);
  for (auto _ : state) {
    ScanReport report = classify_scan(nmax, 1, [](const ScanRow&) {});
    benchmark::DoNotOptimize(report.violations);
  }
}
BENCHMARK(BM_ClassifyScan)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_BruteCounts(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto counts = brute_counts(p, n);
    benchmark::DoNotOptimize(counts.back());
  }
}
BENCHMARK(BM_BruteCounts)
    ->Args({2, 5})
    ->Args({3, 4})
    ->Args({2, 6})
    ->Unit(benchmark::kMillisecond);

void BM_ExBruteforceRow(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto row = ex_bruteforce_row(n);
    benchmark::DoNotOptimize(row.back());
  }
}
BENCHMARK(BM_ExBruteforceRow)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_DecimalString(benchmark::State& state) {
  // ratio near 1 with a few hundred digits on each side, the common shape in
  // asymptotics output
  const CountTable table = build_table(40, 12);
  const Rat ratio = asymptotic_ratio(table, 12, 4);
  for (auto _ : state) {
    std::string s = decimal_string(ratio);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_DecimalString);

}  // namespace

BENCHMARK_MAIN();
