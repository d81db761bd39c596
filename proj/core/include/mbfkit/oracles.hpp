#pragma once

#include <vector>

#include "mbfkit/common.hpp"
#include "mbfkit/graph.hpp"
#include "mbfkit/path_set.hpp"

namespace mbfkit {

/// Exact distances from `source`; +inf for unreachable nodes.
std::vector<Dist> dijkstra(const WeightedGraph& g, NodeId source);

/// Exact distances to the nearest of `sources` (empty set: all +inf).
std::vector<Dist> dijkstra(const WeightedGraph& g, const std::vector<NodeId>& sources);

/// Distances using at most h edges, by h rounds of pull relaxation. The
/// relaxation accumulates edge weight plus downstream value in that order,
/// matching the engine's fold, so equal paths produce identical doubles.
std::vector<Dist> hop_limited_distances(const WeightedGraph& g, NodeId source, int h);

struct HopDist {
  Dist dist = kInf;
  int hops = -1;
};

/// Per node: the shortest-path distance and the minimum edge count among
/// shortest paths, with a parent tree realizing those paths when requested.
std::vector<HopDist> min_hop_dijkstra(const WeightedGraph& g, NodeId source,
                                      std::vector<NodeId>* parent = nullptr);

/// Maximum over connected pairs of the minimum hop count of a shortest path.
/// Throws InvariantError when the graph is disconnected.
int shortest_path_diameter(const WeightedGraph& g);

/// Every loop-free path starting at v with at most h edges, including the
/// trivial path (v). Weights are right folds along the tuple. Guarded to
/// h <= 6 and n <= 10; anything larger is combinatorially useless.
PathSet enumerate_paths(const WeightedGraph& g, NodeId v, int h);

}  // namespace mbfkit
