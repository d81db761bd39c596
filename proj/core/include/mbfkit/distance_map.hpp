#pragma once

#include <vector>

#include "mbfkit/common.hpp"

namespace mbfkit {

struct DistEntry {
  NodeId node;
  Dist value;

  friend bool operator==(const DistEntry&, const DistEntry&) = default;
};

/// Sparse min-plus vector: entries sorted by node id, each value finite.
/// An absent node means +inf, so the empty map is the bottom element and
/// infinite values are never stored.
struct DistanceMap {
  std::vector<DistEntry> entries;

  static DistanceMap bottom() { return {}; }
  static DistanceMap singleton(NodeId node, Dist value);

  bool is_bottom() const { return entries.empty(); }
  std::size_t size() const { return entries.size(); }

  /// Value at `node`, +inf when absent.
  Dist at(NodeId node) const;

  friend bool operator==(const DistanceMap&, const DistanceMap&) = default;
};

/// Entry-wise minimum.
DistanceMap oplus(const DistanceMap& x, const DistanceMap& y);

/// Adds s to every entry; s = +inf annihilates to bottom.
DistanceMap scale(Dist s, const DistanceMap& x);

/// Minimum over any number of maps. Equal to folding oplus in any order.
DistanceMap aggregate(const std::vector<DistanceMap>& parts);

}  // namespace mbfkit
