#pragma once

#include <cstdint>
#include <vector>

#include "mbfkit/frt.hpp"

namespace mbfkit {

/// Facility candidates: repeatedly sample from the surviving pool, retire
/// the half of the pool closest to everything sampled so far this round,
/// and stop once a sample covers the pool. Closeness is measured in the
/// simulated graph through the oracle. Returns the union of all samples.
std::vector<NodeId> kmedian_candidates(const SimulatedGraphH& sim, NodeId k,
                                       std::uint64_t seed, int cap_const = 8);

/// Binary view of an embedding tree: unary chains are collapsed into their
/// lone child edge and wider nodes are split with zero-weight connectors,
/// preserving all pairwise leaf distances.
struct BinaryTree {
  struct Node {
    int parent = -1;
    Dist parent_weight = 0;
    int left = -1;
    int right = -1;
    int depth = 0;
    int tin = 0;
    int tout = 0;  // preorder interval, subtree test is tin <= x.tin < tout
    int leaf_graph_node = -1;
  };
  std::vector<Node> nodes;
  std::vector<int> leaf_index;  // graph node -> node index, -1 when absent
  int root = -1;
};

BinaryTree binarize_tree(const FrtTree& t);

/// Distance between two nodes of the binary tree, by index.
Dist binary_tree_distance(const BinaryTree& t, int a, int b);

struct TreeKMedian {
  std::vector<NodeId> facilities;
  double objective = 0;  // sum of tree distances from every leaf to its facility
};

/// Optimal placement of at most k facilities among the candidate leaves,
/// minimizing the summed tree distance of all leaves. Exact on the tree.
TreeKMedian kmedian_tree_dp(const BinaryTree& t, const std::vector<NodeId>& candidates,
                            NodeId k);

struct KMedianResult {
  std::vector<NodeId> facilities;
  double objective = 0;       // sum over all nodes of exact graph distance to F
  double tree_objective = 0;  // the DP value on the sampled tree
  std::vector<NodeId> candidates;
};

/// Full pipeline: candidates, embedding of the candidate submetric, binary
/// normalization, tree DP, and exact re-costing of the chosen facilities.
KMedianResult kmedian(const WeightedGraph& g, NodeId k, const EmbedConfig& cfg);

}  // namespace mbfkit
