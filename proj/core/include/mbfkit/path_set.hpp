#pragma once

#include <map>
#include <vector>

#include "mbfkit/common.hpp"

namespace mbfkit {

/// Set of loop-free node tuples, each carrying the minimum weight seen for
/// that tuple. Tuples are canonical map keys, so lexicographic path order
/// falls out of the container and the empty set is the bottom element.
struct PathSet {
  std::map<std::vector<NodeId>, Dist> paths;

  static PathSet bottom() { return {}; }
  /// Multiplicative neutral: every single node as a zero-weight path.
  static PathSet one(NodeId node_count);
  static PathSet single(std::vector<NodeId> path, Dist weight);

  bool is_bottom() const { return paths.empty(); }
  std::size_t size() const { return paths.size(); }

  friend bool operator==(const PathSet&, const PathSet&) = default;
};

/// Union keeping the minimum weight per tuple.
PathSet oplus(const PathSet& x, const PathSet& y);

/// All concatenations of a path from x with a path from y sharing the glue
/// node (x's last = y's first, counted once). Concatenations that would
/// repeat a node are dropped; equal tuples keep the minimum weight.
PathSet odot(const PathSet& x, const PathSet& y);

}  // namespace mbfkit
