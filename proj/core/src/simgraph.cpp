#include "mbfkit/simgraph.hpp"

#include <random>

#include "mbfkit/oracles.hpp"
#include "mbfkit/parallel.hpp"

namespace mbfkit {

LevelAssignment sample_levels(NodeId n, std::uint64_t seed) {
  LevelAssignment out;
  out.level.resize(n);
  std::mt19937_64 rng(seed);
  std::geometric_distribution<int> geo(0.5);  // P[k] = 2^-(k+1)
  for (NodeId v = 0; v < n; ++v) out.level[v] = geo(rng);
  out.lambda_max = 0;
  for (int l : out.level) out.lambda_max = std::max(out.lambda_max, l);
  return out;
}

double h_edge_weight(int pair_level, int lambda_max, double eps_hat, Dist dist_d) {
  if (dist_d == kInf) return kInf;
  return std::pow(1.0 + eps_hat, lambda_max - pair_level) * dist_d;
}

SimulatedGraphH make_simulated_graph(const AugmentedGraph& gprime, LevelAssignment levels,
                                     int d, double eps_hat) {
  if (d < 1) throw InvariantError("simulated graph needs a hop budget of at least 1");
  if (eps_hat < 0) throw InvariantError("eps_hat must be non-negative");
  if (levels.level.size() != gprime.combined().node_count())
    throw InvariantError("level assignment size does not match the graph");
  SimulatedGraphH sim;
  sim.gprime = &gprime;
  sim.levels = std::move(levels);
  sim.d = d;
  sim.eps_hat = eps_hat;
  sim.sigma.resize(sim.levels.lambda_max + 1);
  for (int l = 0; l <= sim.levels.lambda_max; ++l)
    sim.sigma[l] = std::pow(1.0 + eps_hat, sim.levels.lambda_max - l);
  return sim;
}

double default_eps_hat(NodeId n) {
  int lg = ceil_log2(n < 2 ? 2 : n);
  return 1.0 / (static_cast<double>(lg) * lg);
}

WeightedGraph materialize_h(const SimulatedGraphH& sim, NodeId cap) {
  NodeId n = sim.node_count();
  if (n > cap) {
    std::ostringstream msg;
    msg << "materializing H is all-pairs and guarded to " << cap << " nodes";
    throw InvariantError(msg.str());
  }
  std::vector<std::vector<Dist>> rows(n);
  parallel_for(n, [&](std::size_t v) {
    rows[v] = hop_limited_distances(sim.gprime->combined(), static_cast<NodeId>(v), sim.d);
  });
  std::vector<EdgeTriple> edges;
  for (NodeId v = 0; v < n; ++v) {
    for (NodeId w = v + 1; w < n; ++w) {
      double weight = h_edge_weight(sim.levels.pair_level(v, w), sim.levels.lambda_max,
                                    sim.eps_hat, rows[v][w]);
      if (weight != kInf) edges.push_back({v, w, weight});
    }
  }
  return WeightedGraph(n, edges);
}

}  // namespace mbfkit
