#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "mbfkit/hopset.hpp"
#include "mbfkit/oracles.hpp"
#include "test_support.hpp"

using namespace mbfkit;
namespace ts = testsupport;

namespace {

WeightedGraph cycle_graph(NodeId n, double w = 1.0) {
  std::vector<EdgeTriple> edges;
  for (NodeId v = 0; v < n; ++v) edges.push_back({v, static_cast<NodeId>((v + 1) % n), w});
  return WeightedGraph(n, edges);
}

}  // namespace

TEST_CASE("the identity hopset changes nothing") {
  std::mt19937_64 rng(21);
  auto g = ts::random_connected_graph(rng, 10, 8, 1, 10);
  auto aug = identity_hopset(g);
  CHECK(aug.shortcuts().empty());
  CHECK(aug.combined().edge_count() == g.edge_count());
  for (NodeId v = 0; v < 10; ++v)
    CHECK(dijkstra(aug.combined(), v) == dijkstra(g, v));
}

TEST_CASE("cluster shortcuts on a two-node graph add nothing useful") {
  WeightedGraph g(2, {{0, 1, 3.0}});
  auto aug = cluster_shortcut_hopset(g, 4, 99);
  CHECK(aug.combined().edge_count() == 1);
  CHECK(aug.combined().weight(0, 1) == 3.0);
}

TEST_CASE("shortcuts carry their base walk and its exact folded weight") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 6; ++trial) {
    NodeId n = std::uniform_int_distribution<NodeId>(8, 40)(rng);
    auto g = ts::random_connected_graph(rng, n, n / 2, 1, 20);
    auto aug = cluster_shortcut_hopset(g, 8, 1000 + trial);
    for (const auto& sc : aug.shortcuts()) {
      REQUIRE(sc.path.size() >= 3);  // one-edge shortcuts would be pointless
      CHECK(sc.path.front() == sc.u);
      CHECK(sc.path.back() == sc.v);
      Dist folded = 0;
      for (std::size_t i = sc.path.size() - 1; i > 0; --i) {
        Dist w = g.weight(sc.path[i - 1], sc.path[i]);
        REQUIRE(w != kInf);
        folded = w + folded;
      }
      CHECK(folded == sc.weight);

      auto walk = aug.expand(sc.u, sc.v);
      CHECK(walk == sc.path);
    }
    // Base edges expand to themselves.
    for (const auto& e : g.edges()) {
      auto walk = aug.expand(e.u, e.v);
      if (aug.combined().weight(e.u, e.v) == e.weight)
        CHECK(walk == std::vector<NodeId>{e.u, e.v});
    }
  }
}

TEST_CASE("a shortcut that loses to an existing edge is dropped") {
  WeightedGraph g(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.5}});
  AugmentedGraph aug(g, {{0, 2, 2.0, {0, 1, 2}}});
  CHECK(aug.shortcuts().empty());
  CHECK(aug.combined().weight(0, 2) == 1.5);

  AugmentedGraph better(g, {{0, 2, 1.25, {0, 1, 2}}});
  CHECK(better.shortcuts().size() == 1);
  CHECK(better.combined().weight(0, 2) == 1.25);
  CHECK(better.expand(0, 2) == std::vector<NodeId>{0, 1, 2});
}

TEST_CASE("verification measures the worst hop-limited stretch") {
  WeightedGraph path3 = ts::path_graph({1, 1});
  auto id3 = identity_hopset(path3);
  auto rep = verify_hopset(path3, id3.combined(), 2, 0.0);
  CHECK(rep.pass);
  CHECK(rep.max_ratio == 1.0);

  auto starved = verify_hopset(path3, id3.combined(), 1, 0.5);
  CHECK_FALSE(starved.pass);
  CHECK(starved.max_ratio == kInf);

  auto cycle = cycle_graph(64);
  auto aug = cluster_shortcut_hopset(cycle, 8, 7);
  auto rep8 = verify_hopset(cycle, aug.combined(), 8, 0.25);
  double worst = 1.0;
  for (NodeId v = 0; v < 64; ++v) {
    auto exact = dijkstra(cycle, v);
    auto capped = hop_limited_distances(aug.combined(), v, 8);
    for (NodeId u = 0; u < 64; ++u) {
      if (u == v) continue;
      worst = std::max(worst, capped[u] / exact[u]);
    }
  }
  CHECK(rep8.max_ratio == worst);
  CHECK(rep8.pass == (worst <= 1.25));

  int spd = shortest_path_diameter(aug.combined());
  auto full = verify_hopset(cycle, aug.combined(), spd, 0.0);
  CHECK(full.max_ratio == 1.0);
  CHECK(full.pass);
}

TEST_CASE("hopset choice falls back to identity when verification fails") {
  // With a tiny hop budget the shortcut set cannot cover a long path.
  WeightedGraph longpath = [] {
    std::vector<double> w(40, 1.0);
    return ts::path_graph(w);
  }();
  auto choice = choose_hopset(longpath, HopsetStrategy::cluster, 4, 0.1, 5, 512);
  CHECK(choice.fell_back);
  CHECK(choice.d == 40);
  CHECK(choice.hop_ratio == 1.0);
  CHECK(choice.gprime->shortcuts().empty());

  auto ok = choose_hopset(longpath, HopsetStrategy::cluster, 12, 0.1, 5, 512);
  if (!ok.fell_back) {
    CHECK(ok.d == 12);
    CHECK(ok.hop_ratio <= 1.1);
  }

  auto ident = choose_hopset(longpath, HopsetStrategy::identity, 40, 0.1, 5, 512);
  CHECK(ident.d == 40);
  CHECK(ident.hop_ratio == 1.0);
  CHECK_FALSE(ident.fell_back);

  auto trunc = choose_hopset(longpath, HopsetStrategy::identity, 20, 0.1, 5, 512);
  CHECK(trunc.hop_ratio == kInf);
  auto measured = choose_hopset(longpath, HopsetStrategy::identity, 20, 0.1, 5, 512, true);
  CHECK(measured.hop_ratio == kInf);  // a 40-hop path cannot finish in 20 hops
}

TEST_CASE("default hop budgets") {
  CHECK(default_hop_budget(2) == 1);
  CHECK(default_hop_budget(8) == 7);
  CHECK(default_hop_budget(1024) == 400);
}
