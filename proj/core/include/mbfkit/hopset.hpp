#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "mbfkit/common.hpp"
#include "mbfkit/graph.hpp"

namespace mbfkit {

/// A shortcut edge with the base-graph walk it abbreviates. The stored
/// weight is the folded weight of that walk, never a recomputed distance,
/// so expanding a shortcut reproduces its weight exactly.
struct Shortcut {
  NodeId u;
  NodeId v;
  Dist weight;
  std::vector<NodeId> path;  // from u to v in the base graph
};

/// Base graph plus shortcut edges, with provenance for every shortcut that
/// survived the merge (a shortcut no better than an existing edge or another
/// shortcut is dropped before merging).
class AugmentedGraph {
 public:
  AugmentedGraph(WeightedGraph base, std::vector<Shortcut> shortcuts);

  const WeightedGraph& base() const { return base_; }
  const WeightedGraph& combined() const { return combined_; }
  const std::vector<Shortcut>& shortcuts() const { return shortcuts_; }

  /// Base-graph walk realizing the combined edge {u, v}.
  std::vector<NodeId> expand(NodeId u, NodeId v) const;

 private:
  WeightedGraph base_;
  WeightedGraph combined_;
  std::vector<Shortcut> shortcuts_;
  std::map<std::pair<NodeId, NodeId>, std::size_t> shortcut_index_;
};

/// No shortcuts: every distance needs up to n-1 hops but is exact.
AugmentedGraph identity_hopset(const WeightedGraph& g);

/// Samples ceil(sqrt(n) * log2(n)) hub nodes and adds exact-weight shortcuts
/// from each hub to everything it reaches within floor(d/2) hops.
AugmentedGraph cluster_shortcut_hopset(const WeightedGraph& g, int d, std::uint64_t seed);

struct HopsetReport {
  double max_ratio = 1.0;  // worst dist_d(G') / dist(G) over pairs
  NodeId worst_u = 0;
  NodeId worst_v = 0;
  bool pass = true;
};

/// Measures the worst h-hop stretch of the augmented graph against exact
/// base distances; pass means max_ratio <= 1 + eps_hat. Guarded to
/// node counts up to `cap` because it runs all-pairs probes.
HopsetReport verify_hopset(const WeightedGraph& base, const WeightedGraph& combined, int d,
                           double eps_hat, NodeId cap = 512);

/// Hop budget used when none is configured: min(n-1, 4 ceil(log2 n)^2).
int default_hop_budget(NodeId n);

enum class HopsetStrategy { identity, cluster };

/// A hopset picked for a pipeline run. hop_ratio is the certified worst
/// d-hop stretch: measured where verification is feasible, the design target
/// for unverified cluster sets, infinity when nothing is certified.
struct HopsetChoice {
  std::shared_ptr<AugmentedGraph> gprime;
  int d = 1;
  double hop_ratio = kInf;
  bool fell_back = false;  // cluster set failed verification
};

/// Builds the requested hopset with budget d. Cluster sets are verified on
/// graphs up to verify_cap nodes and replaced by the identity set with a
/// full hop budget when they miss 1 + eps_hat. Set `measure` to certify
/// hop_ratio for identity sets below the full budget (costs all-pairs work).
HopsetChoice choose_hopset(const WeightedGraph& g, HopsetStrategy strategy, int d,
                           double eps_hat, std::uint64_t seed, NodeId verify_cap,
                           bool measure = false);

}  // namespace mbfkit
