#include <benchmark/benchmark.h>

#include <random>

#include "mbfkit/engine.hpp"
#include "mbfkit/frt.hpp"
#include "mbfkit/instances.hpp"
#include "mbfkit/oracles.hpp"

namespace {

using namespace mbfkit;

WeightedGraph bench_graph(NodeId n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<EdgeTriple> edges;
  for (NodeId v = 1; v < n; ++v) {
    NodeId p = static_cast<NodeId>(rng() % v);
    edges.push_back({p, v, static_cast<Dist>(1 + rng() % 9)});
  }
  for (NodeId i = 0; i < n / 2; ++i) {
    NodeId u = static_cast<NodeId>(rng() % n);
    NodeId v = static_cast<NodeId>(rng() % n);
    if (u == v) continue;
    edges.push_back({u, v, static_cast<Dist>(1 + rng() % 9)});
  }
  return WeightedGraph(n, edges);
}

void BM_SlfApply(benchmark::State& state) {
  NodeId n = static_cast<NodeId>(state.range(0));
  auto g = bench_graph(n, 1);
  AdjacencyOperator a{&g, 1.0};
  auto alg = make_kssp(n, 4);
  // A populated mid-run state is more representative than the singletons.
  auto x = run_steps(alg, a, alg.initial, 3, true);
  for (auto _ : state) {
    auto y = slf_apply<MinPlusModule>(a, x, 0);
    benchmark::DoNotOptimize(y);
  }
}
BENCHMARK(BM_SlfApply)->Arg(256)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_ApspRun(benchmark::State& state) {
  NodeId n = static_cast<NodeId>(state.range(0));
  auto g = bench_graph(n, 2);
  AdjacencyOperator a{&g, 1.0};
  for (auto _ : state) {
    auto res = mbf_run(make_apsp(n), a);
    benchmark::DoNotOptimize(res.state);
  }
}
BENCHMARK(BM_ApspRun)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_Dijkstra(benchmark::State& state) {
  NodeId n = static_cast<NodeId>(state.range(0));
  auto g = bench_graph(n, 3);
  for (auto _ : state) {
    auto dist = dijkstra(g, 0);
    benchmark::DoNotOptimize(dist);
  }
}
BENCHMARK(BM_Dijkstra)->Arg(1024)->Arg(8192)->Unit(benchmark::kMicrosecond);

void BM_ListPipeline(benchmark::State& state) {
  NodeId n = static_cast<NodeId>(state.range(0));
  auto g = bench_graph(n, 4);
  EmbedConfig cfg;
  cfg.seed = 7;
  for (auto _ : state) {
    auto pipe = compute_le_lists(g, cfg);
    benchmark::DoNotOptimize(pipe.lists);
  }
}
BENCHMARK(BM_ListPipeline)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_TreeBuild(benchmark::State& state) {
  NodeId n = static_cast<NodeId>(state.range(0));
  auto g = bench_graph(n, 5);
  EmbedConfig cfg;
  cfg.seed = 8;
  auto pipe = compute_le_lists(g, cfg);
  for (auto _ : state) {
    auto tree = build_frt_tree(pipe.lists, pipe.order, pipe.min_pair_distance,
                               pipe.max_pair_distance);
    benchmark::DoNotOptimize(tree.nodes);
  }
}
BENCHMARK(BM_TreeBuild)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_TreeDistance(benchmark::State& state) {
  NodeId n = 512;
  auto g = bench_graph(n, 6);
  EmbedConfig cfg;
  cfg.seed = 9;
  auto pipe = compute_le_lists(g, cfg);
  auto tree = build_frt_tree(pipe.lists, pipe.order, pipe.min_pair_distance,
                             pipe.max_pair_distance);
  std::mt19937_64 rng(10);
  for (auto _ : state) {
    NodeId u = static_cast<NodeId>(rng() % n);
    NodeId v = static_cast<NodeId>(rng() % n);
    benchmark::DoNotOptimize(tree_distance(tree, u, v));
  }
}
BENCHMARK(BM_TreeDistance);

}  // namespace

BENCHMARK_MAIN();
