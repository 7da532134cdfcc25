#include "brb/catalog.hpp"

#include "props_suite.hpp"

#include <benchmark/benchmark.h>

namespace
{

using brb::LieAlgebra;

// Galilei dual against Galilei: the only dim-4 search in the catalog.
std::pair<LieAlgebra, LieAlgebra> galilei_pair()
{
  auto e = brb::catalog_get("galilei");
  return {brb::dual_algebra(e.algebra, e.r), e.algebra};
}

// No witness exists, so the whole box is walked.
std::pair<LieAlgebra, LieAlgebra> exhaustive_pair()
{
  auto e = brb::catalog_get("galilei");
  LieAlgebra other("other", 4);
  other.add(0, 1, 1, brb::Scalar(1)).add(0, 2, 2, brb::Scalar(1)).add(0, 3, 3, brb::Scalar(1));
  return {e.algebra, other};
}

void BM_SearchSerial(benchmark::State& state)
{
  auto [a, b] = state.range(0) ? exhaustive_pair() : galilei_pair();
  for (auto _ : state)
    benchmark::DoNotOptimize(brb::search_automorphism_serial(a, b, static_cast<int>(state.range(1))));
}

void BM_SearchParallel(benchmark::State& state)
{
  auto [a, b] = state.range(0) ? exhaustive_pair() : galilei_pair();
  for (auto _ : state)
    benchmark::DoNotOptimize(brb::search_automorphism(a, b, static_cast<int>(state.range(1))));
}

void BM_PropsSerial(benchmark::State& state)
{
  auto cases = brb::testing::props_cases(1);
  for (auto _ : state)
    benchmark::DoNotOptimize(brb::testing::run_props_suite_serial(cases, 3, 300));
}

void BM_PropsParallel(benchmark::State& state)
{
  auto cases = brb::testing::props_cases(1);
  for (auto _ : state)
    benchmark::DoNotOptimize(brb::testing::run_props_suite(cases, 3, 300));
}

void BM_VerifyTable(benchmark::State& state)
{
  auto entries = brb::default_catalog();
  for (auto _ : state)
    benchmark::DoNotOptimize(brb::verify_entries(entries));
}

} // namespace

BENCHMARK(BM_SearchSerial)->Args({0, 1})->Args({0, 2})->Args({1, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchParallel)->Args({0, 1})->Args({0, 2})->Args({1, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PropsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PropsParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyTable)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
