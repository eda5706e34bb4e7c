#include "hurwicz/estimate.hpp"
#include "hurwicz/reference_case.hpp"

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

using namespace hurwicz;

namespace {

// Deterministic synthetic tree: `decisions` binary-or-ternary decision
// states, `stage2` second-stage states, payoffs spread over small rationals.
DecisionTree synthetic_tree(int decisions, int alts, int stage2) {
  DecisionTree tree;
  tree.name = "bench";
  for (int i = 0; i < decisions; ++i) tree.stage1.push_back({"s" + std::to_string(i), true});
  for (int j = 0; j < stage2; ++j) tree.stage2.push_back("t" + std::to_string(j));
  for (int d = 0; d < decisions; ++d) {
    std::vector<std::string> labels;
    for (int a = 0; a < alts; ++a) labels.push_back(std::to_string(a));
    tree.alternatives.push_back(std::move(labels));
    std::vector<std::vector<Rational>> block;
    for (int a = 0; a < alts; ++a) {
      std::vector<Rational> row;
      for (int j = 0; j < stage2; ++j)
        row.push_back(Rational((d * 7 + a * 3 + j * 5) % 17 - 5, 1 + (a + j) % 3));
      block.push_back(std::move(row));
    }
    tree.payoff.push_back(std::move(block));
  }
  tree.stage1_probs = std::vector<Rational>(static_cast<std::size_t>(decisions),
                                            Rational(1, decisions));
  tree.stage2_probs =
      std::vector<Rational>(static_cast<std::size_t>(stage2), Rational(1, stage2));
  return tree;
}

void BM_Normalize(benchmark::State& state) {
  const DecisionTree tree =
      synthetic_tree(static_cast<int>(state.range(0)), 2, 4);
  for (auto _ : state) {
    const PayoffMatrix m = normalize(tree);
    benchmark::DoNotOptimize(m.cells.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Normalize)->Arg(3)->Arg(6)->Arg(10)->Complexity();

void BM_Sweep(benchmark::State& state) {
  const PayoffMatrix m = normalize(reference_tree());
  const Rational step(1, state.range(0));
  for (auto _ : state) {
    const SweepTable table = sweep(m, step);
    benchmark::DoNotOptimize(table.best_value.data());
  }
}
BENCHMARK(BM_Sweep)->Arg(10)->Arg(100)->Arg(1000);

void BM_Regions(benchmark::State& state) {
  const PayoffMatrix m = normalize(synthetic_tree(static_cast<int>(state.range(0)), 2, 4));
  for (auto _ : state) {
    const LambdaRegionSet regions = strategy_regions(m);
    benchmark::DoNotOptimize(regions.regions.data());
  }
}
BENCHMARK(BM_Regions)->Arg(3)->Arg(6)->Arg(10);

void BM_Simulate(benchmark::State& state) {
  const DecisionTree tree = reference_tree();
  const Behavior behavior{RiskParameter(Rational(7, 10))};
  for (auto _ : state) {
    const ObservationLog log = simulate(tree, behavior, static_cast<std::size_t>(state.range(0)),
                                        42);
    benchmark::DoNotOptimize(log.records.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Simulate)->Arg(100)->Arg(1000)->Arg(10000);

void BM_Estimate(benchmark::State& state) {
  const DecisionTree tree = reference_tree();
  const ObservationLog log =
      simulate(tree, RiskParameter(Rational(7, 10)), static_cast<std::size_t>(state.range(0)),
               42);
  for (auto _ : state) {
    const RiskProfile profile = estimate_lambda(log, tree);
    benchmark::DoNotOptimize(profile.intervals.data());
  }
}
BENCHMARK(BM_Estimate)->Arg(15)->Arg(200)->Arg(2000);

}  // namespace

BENCHMARK_MAIN();
