#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "mbfkit/simgraph.hpp"

namespace mbfkit {

/// A uniform random total order on nodes (rank[v] = position, 0 first) and
/// the scale jitter beta in [1, 2), drawn from streams of `seed`.
struct RandomOrder {
  std::vector<NodeId> rank;
  double beta = 1.0;
  std::uint64_t seed = 0;
};

RandomOrder draw_random_order(NodeId n, std::uint64_t seed);

/// Drops every entry dominated under the order: (w, d_w) dominates (v, d_v)
/// when rank[w] < rank[v] and d_w <= d_v. Surviving entries, read in
/// ascending distance, have strictly decreasing ranks.
DistanceMap le_filter(const DistanceMap& x, const std::vector<NodeId>& rank);

/// List-elimination instance: per-node distances to the given sources (all
/// nodes by default), pruned by le_filter.
MbfAlgorithm<MinPlusModule> make_le_instance(NodeId n, const RandomOrder& order);
MbfAlgorithm<MinPlusModule> make_le_instance(NodeId n, const RandomOrder& order,
                                             const std::vector<NodeId>& sources);

struct LeEntry {
  Dist distance;
  NodeId node;

  friend bool operator==(const LeEntry&, const LeEntry&) = default;
};

/// Final eliminated list of one node, ascending by distance. The last entry
/// is always the minimum-rank source.
struct LeList {
  std::vector<LeEntry> entries;

  bool empty() const { return entries.empty(); }
  friend bool operator==(const LeList&, const LeList&) = default;
};

struct EmbedConfig {
  std::uint64_t seed = 0;
  double eps_hat = 0;   // <= 0 picks 1 / ceil(log2 n)^2
  int d = 0;            // <= 0 picks min(n-1, 4 ceil(log2 n)^2)
  HopsetStrategy hopset = HopsetStrategy::identity;
  int cap_const = 8;
  bool record_traces = false;
  int sample_index = 0;              // offsets every random stream
  std::vector<NodeId> sources;       // empty = embed all nodes
  NodeId verify_cap = 512;           // all-pairs guard for hopset verification
};

/// Everything downstream stages need from one list computation. The
/// simulated graph borrows the augmented graph, which is heap-pinned so the
/// bundle can be moved freely.
struct LePipeline {
  std::shared_ptr<AugmentedGraph> gprime;
  SimulatedGraphH sim;
  RandomOrder order;
  std::vector<LeList> lists;  // empty for nodes outside the embedded set
  std::shared_ptr<MinPlusTrace> trace;  // null unless recording was requested
  int iterations = 0;
  Dist min_pair_distance = 0;  // r: least nonzero list distance
  Dist max_pair_distance = 0;  // R: greatest list distance
  double eps_hat = 0;
  int d = 0;
  bool hopset_fell_back = false;  // cluster strategy failed verification
};

/// Runs the full list pipeline: hopset, levels, order, simulated run with
/// the elimination filter, list extraction. Requires a connected graph.
LePipeline compute_le_lists(const WeightedGraph& g, const EmbedConfig& cfg);

/// Sampled embedding tree. Leaves at level 0 carry graph nodes; each node's
/// edge to its parent at shifted level l+1 weighs beta * 2^(i_min + l + 1).
struct FrtTree {
  struct Node {
    int parent = -1;
    Dist parent_weight = 0;
    int level = 0;           // shifted level, leaves at 0
    NodeId head = 0;         // the node's ball center
    NodeId repr_leaf = 0;    // smallest graph id among descendant leaves
    int leaf_graph_node = -1;
  };
  std::vector<Node> nodes;
  std::vector<int> leaf_index;  // graph node -> node index, -1 when absent
  int root = -1;
  double beta = 1.0;
  int i_min = 0;       // unshifted index of the leaf level
  int level_count = 1;
};

/// Builds the tree from final lists (every node with a non-empty list
/// becomes a leaf). min_dist and max_dist set the scale grid; the pipeline
/// passes its list-derived extremes.
FrtTree build_frt_tree(const std::vector<LeList>& lists, const RandomOrder& order,
                       Dist min_dist, Dist max_dist);

/// Distance between the leaves of two graph nodes.
Dist tree_distance(const FrtTree& t, NodeId v, NodeId w);

struct StretchReport {
  double mean_stretch = 1.0;
  double max_stretch = 1.0;
  std::size_t dominated_pairs = 0;  // pairs with dist_T < dist_G, expected 0
  std::size_t pair_count = 0;
};

/// Compares tree distances against exact graph distances over all leaf pairs.
StretchReport stretch_report(const FrtTree& t, const WeightedGraph& g);

struct ReconstructedPath {
  std::vector<NodeId> nodes;  // walk in the base graph
  Dist weight = 0;
};

/// Expands the tree edge above `tree_node` into a base-graph walk of weight
/// at most 3x the tree edge weight. Needs a pipeline with recorded traces.
ReconstructedPath reconstruct_path(const FrtTree& t, int tree_node, const LePipeline& pipe);

/// Walk in the augmented graph from `from` to `target` whose folded weight
/// reproduces the final list value exactly, replayed from the trace.
std::vector<NodeId> trace_gprime_path(const LePipeline& pipe, NodeId from, NodeId target);

}  // namespace mbfkit
