#include "mbfkit/hopset.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>
#include <sstream>

#include "mbfkit/oracles.hpp"
#include "mbfkit/rng.hpp"

namespace mbfkit {

AugmentedGraph::AugmentedGraph(WeightedGraph base, std::vector<Shortcut> shortcuts)
    : base_(std::move(base)) {
  // Keep only shortcuts that strictly beat the base edge, one per pair.
  std::map<std::pair<NodeId, NodeId>, Shortcut> best;
  for (auto& s : shortcuts) {
    if (s.u == s.v) continue;
    std::pair<NodeId, NodeId> key{std::min(s.u, s.v), std::max(s.u, s.v)};
    if (s.weight >= base_.weight(s.u, s.v)) continue;
    auto it = best.find(key);
    if (it == best.end() || s.weight < it->second.weight) best[key] = std::move(s);
  }
  std::vector<EdgeTriple> edges = base_.edges();
  shortcuts_.reserve(best.size());
  for (auto& [key, s] : best) {
    edges.push_back({s.u, s.v, s.weight});
    shortcut_index_[key] = shortcuts_.size();
    shortcuts_.push_back(std::move(s));
  }
  combined_ = WeightedGraph(base_.node_count(), edges);
}

std::vector<NodeId> AugmentedGraph::expand(NodeId u, NodeId v) const {
  Dist w = combined_.weight(u, v);
  if (w == kInf) throw InvariantError("expand called on a non-edge");
  if (base_.weight(u, v) == w) return {u, v};
  auto it = shortcut_index_.find({std::min(u, v), std::max(u, v)});
  if (it == shortcut_index_.end()) throw InvariantError("edge has no provenance");
  const Shortcut& s = shortcuts_[it->second];
  std::vector<NodeId> path = s.path;
  if (s.u != u) std::reverse(path.begin(), path.end());
  return path;
}

AugmentedGraph identity_hopset(const WeightedGraph& g) { return AugmentedGraph(g, {}); }

namespace {

/// Dijkstra restricted to paths of at most `hop_limit` edges, with parents.
/// Keys are (dist, hops, node), so the tree is deterministic.
void truncated_search(const WeightedGraph& g, NodeId source, int hop_limit,
                      std::vector<HopDist>& out, std::vector<NodeId>& parent) {
  out.assign(g.node_count(), HopDist{});
  parent.assign(g.node_count(), source);
  out[source] = {0, 0};
  struct Item {
    Dist dist;
    int hops;
    NodeId node;
    bool operator>(const Item& o) const {
      if (dist != o.dist) return dist > o.dist;
      if (hops != o.hops) return hops > o.hops;
      return node > o.node;
    }
  };
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  heap.push({0, 0, source});
  while (!heap.empty()) {
    auto [d, h, v] = heap.top();
    heap.pop();
    if (d != out[v].dist || h != out[v].hops) continue;
    if (h == hop_limit) continue;
    for (const Edge& e : g.neighbors(v)) {
      Dist nd = d + e.weight;
      int nh = h + 1;
      bool better = out[e.to].hops < 0 || nd < out[e.to].dist ||
                    (nd == out[e.to].dist && nh < out[e.to].hops);
      if (better) {
        out[e.to] = {nd, nh};
        parent[e.to] = v;
        heap.push({nd, nh, e.to});
      }
    }
  }
}

}  // namespace

AugmentedGraph cluster_shortcut_hopset(const WeightedGraph& g, int d, std::uint64_t seed) {
  if (d < 2) throw InvariantError("cluster shortcut hopset needs d >= 2");
  NodeId n = g.node_count();
  if (n == 0) return AugmentedGraph(g, {});

  std::size_t hub_count = static_cast<std::size_t>(
      std::ceil(std::sqrt(static_cast<double>(n)) * std::max(1, ceil_log2(n))));
  hub_count = std::min<std::size_t>(hub_count, n);

  std::vector<NodeId> pool(n);
  for (NodeId v = 0; v < n; ++v) pool[v] = v;
  auto rng = named_stream(seed, "hopset.hubs");
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(hub_count);
  std::sort(pool.begin(), pool.end());

  std::vector<Shortcut> shortcuts;
  std::vector<HopDist> dist;
  std::vector<NodeId> parent;
  int radius = d / 2;
  for (NodeId hub : pool) {
    truncated_search(g, hub, radius, dist, parent);
    for (NodeId v = 0; v < n; ++v) {
      if (v == hub || dist[v].hops < 0 || dist[v].hops <= 1) continue;
      std::vector<NodeId> path;
      for (NodeId cur = v; cur != hub; cur = parent[cur]) path.push_back(cur);
      path.push_back(hub);
      std::reverse(path.begin(), path.end());
      // Fold the tree path so the shortcut weight is reproducible from it.
      Dist w = 0;
      for (std::size_t i = path.size() - 1; i-- > 0;)
        w = g.weight(path[i], path[i + 1]) + w;
      shortcuts.push_back({hub, v, w, std::move(path)});
    }
  }
  return AugmentedGraph(g, std::move(shortcuts));
}

HopsetReport verify_hopset(const WeightedGraph& base, const WeightedGraph& combined, int d,
                           double eps_hat, NodeId cap) {
  NodeId n = base.node_count();
  if (n > cap) {
    std::ostringstream msg;
    msg << "hopset verification is all-pairs and guarded to " << cap << " nodes";
    throw InvariantError(msg.str());
  }
  if (combined.node_count() != n)
    throw InvariantError("augmented graph has a different node count");
  HopsetReport rep;
  for (NodeId v = 0; v < n; ++v) {
    auto exact = dijkstra(base, v);
    auto capped = hop_limited_distances(combined, v, d);
    for (NodeId w = 0; w < n; ++w) {
      if (w == v || exact[w] == kInf) continue;
      double ratio = capped[w] == kInf ? kInf : capped[w] / exact[w];
      if (ratio > rep.max_ratio) {
        rep.max_ratio = ratio;
        rep.worst_u = v;
        rep.worst_v = w;
      }
    }
  }
  rep.pass = rep.max_ratio <= 1.0 + eps_hat;
  return rep;
}

int default_hop_budget(NodeId n) {
  if (n <= 1) return 1;
  int lg = ceil_log2(n);
  return std::min<int>(static_cast<int>(n) - 1, 4 * lg * lg);
}

HopsetChoice choose_hopset(const WeightedGraph& g, HopsetStrategy strategy, int d,
                           double eps_hat, std::uint64_t seed, NodeId verify_cap,
                           bool measure) {
  NodeId n = g.node_count();
  int full = n > 1 ? static_cast<int>(n) - 1 : 1;
  HopsetChoice out;
  out.d = d;
  if (strategy == HopsetStrategy::cluster) {
    out.gprime = std::make_shared<AugmentedGraph>(cluster_shortcut_hopset(g, d, seed));
    if (n <= verify_cap) {
      auto rep = verify_hopset(g, out.gprime->combined(), d, eps_hat);
      if (rep.pass) {
        out.hop_ratio = rep.max_ratio;
        return out;
      }
      out.gprime = std::make_shared<AugmentedGraph>(identity_hopset(g));
      out.d = full;
      out.hop_ratio = 1.0;
      out.fell_back = true;
      return out;
    }
    out.hop_ratio = 1.0 + eps_hat;
    return out;
  }
  out.gprime = std::make_shared<AugmentedGraph>(identity_hopset(g));
  if (out.d >= full) {
    out.hop_ratio = 1.0;
  } else if (measure && n <= verify_cap) {
    out.hop_ratio = verify_hopset(g, out.gprime->combined(), out.d, eps_hat).max_ratio;
  }
  return out;
}

}  // namespace mbfkit
