#include <benchmark/benchmark.h>

#include "sympres/exactnum/cyclotomic.hpp"
#include "sympres/matgrp/matrix.hpp"

using namespace sympres;

static void BM_CyclotomicMul(benchmark::State &state)
{
  int n = static_cast<int>(state.range(0));
  Cyclotomic a = Cyclotomic::zeta(n, 1) + Cyclotomic(Rational(1, 3));
  Cyclotomic b = Cyclotomic::zeta(n, 2) - Cyclotomic(2);
  for (auto _ : state)
    benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CyclotomicMul)->Arg(4)->Arg(8)->Arg(20)->Arg(60);

static void BM_CyclotomicInverse(benchmark::State &state)
{
  int n = static_cast<int>(state.range(0));
  Cyclotomic a = Cyclotomic(1) + Cyclotomic::zeta(n, 1) * Cyclotomic(3);
  for (auto _ : state)
    benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_CyclotomicInverse)->Arg(8)->Arg(20)->Arg(60);

static void BM_CharacteristicPolynomial4x4(benchmark::State &state)
{
  Cyclotomic z = Cyclotomic::zeta(10, 1), o(1), n(0);
  Matrix m = Matrix::from_rows({{z, o, n, n}, {n, z.inverse(), o, n}, {n, n, z * z, o}, {o, n, n, z}});
  for (auto _ : state)
    benchmark::DoNotOptimize(m.characteristic_polynomial());
}
BENCHMARK(BM_CharacteristicPolynomial4x4);
