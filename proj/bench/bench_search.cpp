// Pruned OpenMP kernels against the serial reference scans.

#include <benchmark/benchmark.h>

#include "ashg/gadgets.hpp"
#include "ashg/kernels.hpp"
#include "ashg/reference.hpp"
#include "support.hpp"

using namespace ashg;

namespace {

// With every valuation positive, the grand coalition gives each player its
// maximum, so no coalition blocks and both searches must finish the space.
struct Fixture {
  Game game;
  Partition partition;
};

Fixture stable_fixture(std::size_t n) {
  std::mt19937_64 rng(n);
  return {test::random_game(rng, n, 1.0, 1, 10), Partition::grand(n)};
}

void BM_SubsetReference(benchmark::State& state) {
  const auto f = stable_fixture(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(reference::first_blocking(f.game, f.partition, kernels::BlockMode::strong));
}

void BM_SubsetKernel(benchmark::State& state) {
  const auto f = stable_fixture(static_cast<std::size_t>(state.range(0)));
  const kernels::BlockingSearch search(f.game);
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(search.first(f.partition, kernels::BlockMode::strong, threads));
}

void BM_ParetoReference(benchmark::State& state) {
  const auto pg = gadgets::reduce_partition({{2, 3, 7, 1, 1}});
  for (auto _ : state)
    benchmark::DoNotOptimize(reference::first_pareto_improvement(pg.gadget.game, pg.grand));
}

void BM_ParetoKernel(benchmark::State& state) {
  const auto pg = gadgets::reduce_partition({{2, 3, 7, 1, 1}});
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::first_dominating_rgs(pg.gadget.game, pg.grand, threads));
}

void BM_StrictCoreGadget(benchmark::State& state) {
  const gadgets::E3cInstance inst{{"1", "2", "3"}, {{0, 1, 2}}};
  const auto gg = gadgets::reduce_e3c(inst);
  const Partition w = gadgets::witness_partition_e3c(inst, gg, {0});
  const kernels::BlockingSearch search(gg.game);
  for (auto _ : state)
    benchmark::DoNotOptimize(search.first(w, kernels::BlockMode::weak, static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_SubsetReference)->Arg(10)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SubsetKernel)->Args({10, 1})->Args({14, 1})->Args({14, 4})->Args({18, 1})->Args({18, 4})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ParetoReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ParetoKernel)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StrictCoreGadget)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
