#include <benchmark/benchmark.h>

#include "sympres/kleinian/kleinian.hpp"
#include "sympres/repchar/gamma_action.hpp"
#include "sympres/srg/row_check.hpp"

using namespace sympres;

static void BM_BuildKleinianI(benchmark::State &state)
{
  for (auto _ : state)
    benchmark::DoNotOptimize(build_kleinian(KleinianSpec::I()).order());
}
BENCHMARK(BM_BuildKleinianI)->Unit(benchmark::kMillisecond);

static void BM_CharacterTable(benchmark::State &state)
{
  KleinianSpec specs[] = {KleinianSpec::binary_dihedral(4), KleinianSpec::O(), KleinianSpec::I()};
  FiniteMatrixGroup g = build_kleinian(specs[state.range(0)]);
  for (auto _ : state)
    benchmark::DoNotOptimize(character_table(g));
  state.SetLabel(specs[state.range(0)].name());
}
BENCHMARK(BM_CharacterTable)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

static void BM_GammaActionOT(benchmark::State &state)
{
  FiniteMatrixGroup k = build_kleinian(KleinianSpec::O());
  Subset h = canonical_subset(k, KleinianSpec::O(), KleinianSpec::T(), true);
  auto gamma = std::make_shared<QuotientGroup>(k, h);
  for (auto _ : state)
    benchmark::DoNotOptimize(gamma_action(k, h, gamma).vertex_count());
}
BENCHMARK(BM_GammaActionOT)->Unit(benchmark::kMillisecond);

static void BM_CheckRow(benchmark::State &state)
{
  const char *rows[] = {"A(m=2)", "N", "H"};
  TableRow row = parse_row_spec(rows[state.range(0)]);
  for (auto _ : state)
    benchmark::DoNotOptimize(check_row(row).order);
  state.SetLabel(rows[state.range(0)]);
}
BENCHMARK(BM_CheckRow)->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->Iterations(1);
