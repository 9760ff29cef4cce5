#include <benchmark/benchmark.h>

#include <numeric>

#include "sympres/classify/verdict.hpp"

using namespace sympres;

static void BM_ClassifyRow(benchmark::State &state)
{
  const char *rows[] = {"A(m=3)", "I", "N", "S"};
  TableRow row = parse_row_spec(rows[state.range(0)]);
  for (auto _ : state)
    benchmark::DoNotOptimize(classify(row).result);
  state.SetLabel(rows[state.range(0)]);
}
BENCHMARK(BM_ClassifyRow)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_ClassifyAllDefaultGrid(benchmark::State &state)
{
  for (auto _ : state)
    benchmark::DoNotOptimize(classify_all().mismatches());
}
BENCHMARK(BM_ClassifyAllDefaultGrid)->Unit(benchmark::kMillisecond);

static void BM_ThreeFactorCheck(benchmark::State &state)
{
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_lemma71().tangent_rank);
}
BENCHMARK(BM_ThreeFactorCheck)->Unit(benchmark::kMillisecond);

static void BM_CharpolyIdentitySweep(benchmark::State &state)
{
  int m = static_cast<int>(state.range(0));
  for (auto _ : state)
    for (int a = 1; a < 2 * m; a += 2)
      for (int i = 0; i < m; ++i)
        if (std::gcd(a, 2 * m) == 1)
          benchmark::DoNotOptimize(charpoly_prop57_check(m, a, i));
}
BENCHMARK(BM_CharpolyIdentitySweep)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
