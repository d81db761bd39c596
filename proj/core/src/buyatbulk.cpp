#include "mbfkit/buyatbulk.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace mbfkit {

BabResult buy_at_bulk(const WeightedGraph& g, const std::vector<Demand>& demands,
                      const std::vector<CableType>& cables, const EmbedConfig& cfg) {
  if (cables.empty()) throw InvariantError("at least one cable type is required");
  for (const auto& c : cables) {
    if (!(c.capacity > 0) || !std::isfinite(c.capacity) || !(c.cost > 0) ||
        !std::isfinite(c.cost))
      throw InvariantError("cable types need positive finite capacity and cost");
  }
  NodeId n = g.node_count();
  for (const auto& dm : demands) {
    if (dm.s >= n || dm.t >= n) throw InvariantError("demand endpoint out of range");
    if (!(dm.amount >= 0) || !std::isfinite(dm.amount))
      throw InvariantError("demand amounts must be finite and non-negative");
  }

  BabResult out;
  if (demands.empty()) return out;

  EmbedConfig ec = cfg;
  ec.record_traces = true;  // reconstruction walks the traces
  ec.sources.clear();
  auto pipe = compute_le_lists(g, ec);
  auto t = build_frt_tree(pipe.lists, pipe.order, pipe.min_pair_distance,
                          pipe.max_pair_distance);

  // Flow over the edge above each tree node.
  std::vector<double> flow(t.nodes.size(), 0);
  for (const auto& dm : demands) {
    if (dm.s == dm.t || dm.amount <= 0) continue;
    int a = t.leaf_index[dm.s];
    int b = t.leaf_index[dm.t];
    while (a != b) {
      flow[a] += dm.amount;
      flow[b] += dm.amount;
      a = t.nodes[a].parent;
      b = t.nodes[b].parent;
    }
  }

  std::map<std::pair<NodeId, NodeId>, std::map<int, long long>> plan;
  for (std::size_t x = 0; x < t.nodes.size(); ++x) {
    if (flow[x] <= 0) continue;
    int best = -1;
    long long best_mult = 0;
    double best_cost = kInf;
    for (std::size_t i = 0; i < cables.size(); ++i) {
      auto mult = static_cast<long long>(std::ceil(flow[x] / cables[i].capacity));
      double c = cables[i].cost * static_cast<double>(mult);
      if (c < best_cost) {
        best_cost = c;
        best = static_cast<int>(i);
        best_mult = mult;
      }
    }
    out.tree_cost += best_cost * t.nodes[x].parent_weight;
    auto path = reconstruct_path(t, static_cast<int>(x), pipe);
    for (std::size_t i = 0; i + 1 < path.nodes.size(); ++i) {
      NodeId u = std::min(path.nodes[i], path.nodes[i + 1]);
      NodeId v = std::max(path.nodes[i], path.nodes[i + 1]);
      plan[{u, v}][best] += best_mult;  // walks may repeat an edge
    }
  }

  for (const auto& [key, per_cable] : plan) {
    for (const auto& [cable, mult] : per_cable) {
      out.installs.push_back({key.first, key.second, cable, mult});
      out.cost +=
          cables[cable].cost * static_cast<double>(mult) * g.weight(key.first, key.second);
    }
  }
  return out;
}

}  // namespace mbfkit
