#pragma once

#include <vector>

#include "mbfkit/common.hpp"

namespace mbfkit {

struct WidthEntry {
  NodeId node;
  Dist value;

  friend bool operator==(const WidthEntry&, const WidthEntry&) = default;
};

/// Sparse max-min vector: entries sorted by node id, each width positive
/// (+inf allowed). An absent node means width 0, so the empty map is bottom.
struct WidestMap {
  std::vector<WidthEntry> entries;

  static WidestMap bottom() { return {}; }
  static WidestMap singleton(NodeId node, Dist value);

  bool is_bottom() const { return entries.empty(); }
  std::size_t size() const { return entries.size(); }

  /// Width at `node`, 0 when absent.
  Dist at(NodeId node) const;

  friend bool operator==(const WidestMap&, const WidestMap&) = default;
};

/// Entry-wise maximum.
WidestMap oplus(const WidestMap& x, const WidestMap& y);

/// Caps every entry at s; s = 0 annihilates to bottom.
WidestMap scale(Dist s, const WidestMap& x);

}  // namespace mbfkit
