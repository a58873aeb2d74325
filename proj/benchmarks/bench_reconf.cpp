#include <benchmark/benchmark.h>

#include <vector>

#include "reconf/decomposition.hpp"
#include "reconf/lambda.hpp"
#include "reconf/oracle.hpp"
#include "reconf/tar_reach.hpp"
#include "reconf/ts_reach.hpp"

namespace {

using namespace reconf;

// A fixed batch per configuration so every iteration sees the same mix.
std::vector<Instance> batch(int n, int width, Rule::Kind kind) {
  std::vector<Instance> out;
  for (std::uint64_t seed = 0; seed < 8; ++seed) out.push_back(gen_instance(seed, GenProfile{n, width, kind}));
  return out;
}

void BM_ReachTar(benchmark::State& state) {
  auto instances = batch(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), Rule::Kind::tar);
  for (auto _ : state)
    for (const Instance& in : instances)
      benchmark::DoNotOptimize(reach_tar(in.graph, in.rule.k, in.start, in.target).reachable);
  state.SetItemsProcessed(state.iterations() * static_cast<long>(instances.size()));
}
BENCHMARK(BM_ReachTar)->ArgsProduct({{100, 500, 2000}, {4, 8, 12}})->Unit(benchmark::kMillisecond);

void BM_ReachTs(benchmark::State& state) {
  auto instances = batch(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), Rule::Kind::ts);
  for (auto _ : state)
    for (const Instance& in : instances) benchmark::DoNotOptimize(reach_ts(in.graph, in.start, in.target));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(instances.size()));
}
BENCHMARK(BM_ReachTs)->ArgsProduct({{100, 500, 2000}, {4, 8}})->Unit(benchmark::kMillisecond);

void BM_LambdaAll(benchmark::State& state) {
  auto instances = batch(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), Rule::Kind::tar);
  for (auto _ : state)
    for (const Instance& in : instances) benchmark::DoNotOptimize(lambda_all(in.graph, in.start).entries.size());
}
BENCHMARK(BM_LambdaAll)->ArgsProduct({{50, 200}, {4, 8}})->Unit(benchmark::kMillisecond);

void BM_Decompose(benchmark::State& state) {
  auto instances = batch(static_cast<int>(state.range(0)), 8, Rule::Kind::tar);
  for (auto _ : state)
    for (const Instance& in : instances) benchmark::DoNotOptimize(md_tree(in.graph).size());
}
BENCHMARK(BM_Decompose)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

// Exhaustive search at the sizes it can still handle, for comparison.
void BM_OracleTar(benchmark::State& state) {
  auto instances = batch(static_cast<int>(state.range(0)), 4, Rule::Kind::tar);
  for (auto _ : state)
    for (const Instance& in : instances) benchmark::DoNotOptimize(oracle_reach(in.rule, in.graph, in.start, in.target));
}
BENCHMARK(BM_OracleTar)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
