#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "creasim/agent.hpp"
#include "creasim/constraints.hpp"
#include "creasim/io.hpp"
#include "creasim/metrics.hpp"
#include "creasim/network.hpp"
#include "creasim/society.hpp"

namespace {

using namespace creasim;

constexpr std::int64_t kCap = 1'000'000;

SpaceConfig grid(int d, int rho) {
  SpaceConfig cfg;
  cfg.d = d;
  cfg.rho = rho;
  return cfg;
}

AgentSpec plain_agent(double cx, double cy) {
  AgentSpec s;
  s.internal.groups.push_back({WeightedConstraint{1.0, {{0.5, 0.5}, 1.0}}});
  s.external.constraints.push_back(WeightedConstraint{1.0, {{cx, cy}, 1.0}});
  s.params.theta = 0.35;
  return s;
}

SocietyConfig society_config(int agents, int rounds) {
  SocietyConfig cfg;
  cfg.space = grid(2, 10);
  cfg.graph = BaGraphSpec{agents, 2, 7};
  for (int i = 0; i < agents; ++i) {
    AgentSpec s = plain_agent(0.3 + 0.4 * i / agents, 0.7 - 0.4 * i / agents);
    s.update = {true, false, false};
    cfg.agents.push_back(std::move(s));
  }
  cfg.rounds = rounds;
  cfg.seed = 7;
  cfg.snapshot_every = rounds;
  return cfg;
}

void BM_GenerateBa(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate_ba(n, 2, 1));
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_GenerateBa)->Arg(1000)->Arg(10000);

void BM_CcdfTailSlope(benchmark::State& state) {
  const Graph g = generate_ba(10000, 2, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ccdf_tail_slope(g, 4));
  }
}
BENCHMARK(BM_CcdfTailSlope);

void BM_Produce(benchmark::State& state) {
  Agent agent(0, plain_agent(0.5, 0.5), grid(2, 10), 42, kCap);
  int tick = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(agent.produce(++tick));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Produce);

void BM_EvalPartition(benchmark::State& state) {
  const SpaceConfig cfg = grid(2, 20);
  const Agent agent(0, plain_agent(0.4, 0.6), cfg, 42, kCap);
  const auto points = enumerate_space(cfg, kCap);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_partition(agent, points));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(points.size()));
}
BENCHMARK(BM_EvalPartition);

void BM_SocietyRun(benchmark::State& state) {
  const int agents = static_cast<int>(state.range(0));
  const int rounds = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run(society_config(agents, rounds)));
  }
  state.SetItemsProcessed(state.iterations() * agents * rounds);  // agent-ticks
}
BENCHMARK(BM_SocietyRun)->Args({10, 50})->Args({50, 50});

void BM_SerializeEvents(benchmark::State& state) {
  const RunResult r = run(society_config(20, 50));
  for (auto _ : state) {
    benchmark::DoNotOptimize(serialize_events(r.events));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(r.events.size()));
}
BENCHMARK(BM_SerializeEvents);

}  // namespace

BENCHMARK_MAIN();
