#pragma once

#include <span>
#include <string>
#include <vector>

#include "mbfkit/common.hpp"

namespace mbfkit {

struct Edge {
  NodeId to;
  Dist weight;
};

struct EdgeTriple {
  NodeId u;
  NodeId v;
  Dist weight;
};

/// Undirected weighted graph in CSR form. Weights are finite and positive;
/// self loops are rejected; parallel edges collapse to their minimum weight
/// with a warning. Adjacency lists are sorted by neighbor id.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  WeightedGraph(NodeId n, const std::vector<EdgeTriple>& edges,
                std::vector<std::string>* warnings = nullptr);

  NodeId node_count() const { return n_; }
  std::size_t edge_count() const { return m_; }

  std::span<const Edge> neighbors(NodeId v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }

  /// Weight of edge {u, v}, +inf when absent.
  Dist weight(NodeId u, NodeId v) const;

  Dist min_weight() const { return wmin_; }
  Dist max_weight() const { return wmax_; }

  bool is_connected() const;

  /// Collapsed undirected edge list, u < v, sorted.
  std::vector<EdgeTriple> edges() const;

 private:
  NodeId n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Edge> adj_;
  Dist wmin_ = kInf;
  Dist wmax_ = 0;
};

}  // namespace mbfkit
