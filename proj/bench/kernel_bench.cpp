#include <benchmark/benchmark.h>

#include <random>

#include "chowcob/flag/catalogue.hpp"
#include "chowcob/kernels/kernels.hpp"
#include "chowcob/steenrod/bundled.hpp"
#include "chowcob/steenrod/checks.hpp"

using namespace chowcob;

namespace {

Exec mode(const benchmark::State& st) { return st.range(0) ? Exec::parallel : Exec::serial; }

void BM_graded_groups(benchmark::State& st) {
  auto P = so_odd_gt(3).presentation;
  for (auto _ : st) benchmark::DoNotOptimize(graded_groups(P, 0, 11, mode(st)));
}
BENCHMARK(BM_graded_groups)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_recursion(benchmark::State& st) {
  auto T = bzp_table(3, 3);
  for (auto _ : st) benchmark::DoNotOptimize(verify_Q_recursion(T, 1, 10, mode(st)));
}
BENCHMARK(BM_recursion)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_rank_fp(benchmark::State& st) {
  std::mt19937 rng(1);
  const std::size_t n = static_cast<std::size_t>(st.range(1));
  FpMatrix M(n, std::vector<std::uint32_t>(n));
  for (auto& r : M)
    for (auto& x : r) x = rng() % 3;
  for (auto _ : st) benchmark::DoNotOptimize(rank_fp_exec(M, 3, mode(st)));
}
BENCHMARK(BM_rank_fp)->Args({0, 400})->Args({1, 400})->Args({0, 800})->Args({1, 800})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
