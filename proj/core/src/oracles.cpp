#include "mbfkit/oracles.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace mbfkit {

std::vector<Dist> dijkstra(const WeightedGraph& g, const std::vector<NodeId>& sources) {
  std::vector<Dist> dist(g.node_count(), kInf);
  using Item = std::pair<Dist, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  for (NodeId s : sources) {
    if (s >= g.node_count()) throw InvariantError("dijkstra source out of range");
    dist[s] = 0;
    heap.push({0, s});
  }
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (d > dist[v]) continue;
    for (const Edge& e : g.neighbors(v)) {
      Dist nd = d + e.weight;
      if (nd < dist[e.to]) {
        dist[e.to] = nd;
        heap.push({nd, e.to});
      }
    }
  }
  return dist;
}

std::vector<Dist> dijkstra(const WeightedGraph& g, NodeId source) {
  return dijkstra(g, std::vector<NodeId>{source});
}

std::vector<Dist> hop_limited_distances(const WeightedGraph& g, NodeId source, int h) {
  if (source >= g.node_count()) throw InvariantError("hop limit source out of range");
  if (h < 0) throw InvariantError("hop budget must be non-negative");
  std::vector<Dist> dist(g.node_count(), kInf);
  dist[source] = 0;
  std::vector<Dist> next(dist);
  for (int round = 0; round < h; ++round) {
    bool changed = false;
    for (NodeId v = 0; v < g.node_count(); ++v) {
      Dist best = dist[v];
      for (const Edge& e : g.neighbors(v)) {
        if (dist[e.to] == kInf) continue;
        Dist cand = e.weight + dist[e.to];
        if (cand < best) best = cand;
      }
      if (best != dist[v]) changed = true;
      next[v] = best;
    }
    dist.swap(next);
    if (!changed) break;  // later rounds cannot improve a settled vector
  }
  return dist;
}

std::vector<HopDist> min_hop_dijkstra(const WeightedGraph& g, NodeId source,
                                      std::vector<NodeId>* parent) {
  if (source >= g.node_count()) throw InvariantError("dijkstra source out of range");
  std::vector<HopDist> out(g.node_count());
  if (parent) parent->assign(g.node_count(), source);
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
    for (const Edge& e : g.neighbors(v)) {
      Dist nd = d + e.weight;
      int nh = h + 1;
      bool better = nd < out[e.to].dist ||
                    (nd == out[e.to].dist && (out[e.to].hops < 0 || nh < out[e.to].hops));
      if (better) {
        out[e.to] = {nd, nh};
        if (parent) (*parent)[e.to] = v;
        heap.push({nd, nh, e.to});
      }
    }
  }
  return out;
}

int shortest_path_diameter(const WeightedGraph& g) {
  int spd = 0;
  for (NodeId s = 0; s < g.node_count(); ++s) {
    auto hd = min_hop_dijkstra(g, s);
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (hd[v].dist == kInf) {
        std::ostringstream msg;
        msg << "graph is disconnected: no path between " << s << " and " << v;
        throw InvariantError(msg.str());
      }
      spd = std::max(spd, hd[v].hops);
    }
  }
  return spd;
}

namespace {

Dist right_fold_weight(const WeightedGraph& g, const std::vector<NodeId>& path) {
  Dist acc = 0;
  for (std::size_t i = path.size() - 1; i-- > 0;)
    acc = g.weight(path[i], path[i + 1]) + acc;
  return acc;
}

void enumerate_from(const WeightedGraph& g, int budget, std::vector<NodeId>& path,
                    std::vector<std::uint8_t>& on_path, PathSet& out) {
  out.paths.emplace(path, right_fold_weight(g, path));
  if (budget == 0) return;
  NodeId v = path.back();
  for (const Edge& e : g.neighbors(v)) {
    if (on_path[e.to]) continue;
    on_path[e.to] = 1;
    path.push_back(e.to);
    enumerate_from(g, budget - 1, path, on_path, out);
    path.pop_back();
    on_path[e.to] = 0;
  }
}

}  // namespace

PathSet enumerate_paths(const WeightedGraph& g, NodeId v, int h) {
  if (v >= g.node_count()) throw InvariantError("enumeration start out of range");
  if (h < 0 || h > 6 || g.node_count() > 10)
    throw InvariantError("path enumeration guarded to h <= 6 and n <= 10");
  PathSet out;
  std::vector<NodeId> path{v};
  std::vector<std::uint8_t> on_path(g.node_count(), 0);
  on_path[v] = 1;
  enumerate_from(g, h, path, on_path, out);
  return out;
}

}  // namespace mbfkit
