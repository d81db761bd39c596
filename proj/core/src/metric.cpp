#include "mbfkit/metric.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "mbfkit/instances.hpp"
#include "mbfkit/rng.hpp"

namespace mbfkit {

ApproxMetric approx_metric(const WeightedGraph& g, const EmbedConfig& cfg, NodeId cap) {
  NodeId n = g.node_count();
  if (n == 0) throw InvariantError("cannot tabulate an empty graph");
  if (n > cap) {
    std::ostringstream msg;
    msg << "metric table is all-pairs and guarded to " << cap << " nodes";
    throw InvariantError(msg.str());
  }
  if (!g.is_connected()) throw InvariantError("metric requires a connected graph");

  ApproxMetric out;
  out.n = n;
  out.eps_hat = cfg.eps_hat > 0 ? cfg.eps_hat : default_eps_hat(n);
  int d = cfg.d > 0 ? cfg.d : default_hop_budget(n);

  std::string suffix = "." + std::to_string(cfg.sample_index);
  auto choice = choose_hopset(g, cfg.hopset, d, out.eps_hat,
                              derive_seed(cfg.seed, "hopset" + suffix), cfg.verify_cap,
                              /*measure=*/true);
  LevelAssignment levels = sample_levels(n, derive_seed(cfg.seed, "levels" + suffix));
  SimulatedGraphH sim =
      make_simulated_graph(*choice.gprime, std::move(levels), choice.d, out.eps_hat);
  out.lambda_max = sim.levels.lambda_max;

  auto alg = make_apsp(n);
  auto res = oracle_run<MinPlusModule>(sim, alg, cfg.cap_const);

  out.table.assign(static_cast<std::size_t>(n) * n, kInf);
  for (NodeId u = 0; u < n; ++u) {
    for (const auto& e : res.state[u].entries)
      out.table[static_cast<std::size_t>(u) * n + e.node] = e.value;
  }
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u; v < n; ++v) {
      Dist a = out.table[static_cast<std::size_t>(u) * n + v];
      Dist b = out.table[static_cast<std::size_t>(v) * n + u];
      if (a == kInf || b == kInf)
        throw InvariantError("metric closure left an unreachable pair");
      // A path and its reverse may fold to values a last bit apart.
      Dist m = std::min(a, b);
      out.table[static_cast<std::size_t>(u) * n + v] = m;
      out.table[static_cast<std::size_t>(v) * n + u] = m;
    }
  }
  out.bound_factor = std::pow(1.0 + out.eps_hat, out.lambda_max + 1) * choice.hop_ratio;
  return out;
}

}  // namespace mbfkit
