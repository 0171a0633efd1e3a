#include <benchmark/benchmark.h>

#include "reskp/adversaries.hpp"
#include "reskp/algorithms.hpp"
#include "reskp/harness.hpp"
#include "reskp/oracle.hpp"

namespace {

using namespace reskp;

void BM_Popt(benchmark::State& state) {
  const Instance instance = random_instance(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(popt(instance.items));
}
BENCHMARK(BM_Popt)->Arg(8)->Arg(15)->Arg(30);

void BM_BruteForcePopt(benchmark::State& state) {
  const Instance instance = random_instance(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_popt(instance.items));
}
BENCHMARK(BM_BruteForcePopt)->Arg(8)->Arg(15);

void BM_RhoStarEnclosure(benchmark::State& state) {
  const Alpha alpha(Rational(3, 10));
  const int digits = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rho_star(alpha, digits));
}
BENCHMARK(BM_RhoStarEnclosure)->Arg(30)->Arg(100);

void BM_FourItemDuel(benchmark::State& state) {
  const Alpha alpha(Rational(3, 10));
  const PolicyPtr policy = select_policy(alpha);
  const Adversary adversary = four_item_adversary(alpha, Rational(1, 1000000));
  for (auto _ : state) benchmark::DoNotOptimize(duel(*policy, adversary));
}
BENCHMARK(BM_FourItemDuel);

void BM_ChainDuel(benchmark::State& state) {
  // Reserving every bait at alpha 1/20 plays the longest chain whose reserve
  // still fits the exhaustive oracle.
  const Alpha alpha(Rational(1, 20));
  const ScriptedPolicy reserve_all(alpha, std::vector<StepAction>(40, Reserve{}));
  const Adversary adversary = chain_adversary(alpha, Rational(1, 1000));
  for (auto _ : state) benchmark::DoNotOptimize(duel(reserve_all, adversary));
}
BENCHMARK(BM_ChainDuel);

void BM_SweepCell(benchmark::State& state) {
  SweepSpec spec;
  spec.start = spec.end = Rational(1, 2);
  spec.adversaries = adversary_names();
  spec.instances_per_cell = 100;
  for (auto _ : state) benchmark::DoNotOptimize(sweep(spec));
}
BENCHMARK(BM_SweepCell)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
