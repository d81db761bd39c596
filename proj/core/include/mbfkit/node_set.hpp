#pragma once

#include <algorithm>
#include <vector>

#include "mbfkit/common.hpp"

namespace mbfkit {

/// Sorted set of node ids; the Boolean reachability carrier. Empty is bottom.
struct NodeSet {
  std::vector<NodeId> nodes;

  static NodeSet bottom() { return {}; }
  static NodeSet singleton(NodeId v) { return {{v}}; }

  bool is_bottom() const { return nodes.empty(); }
  std::size_t size() const { return nodes.size(); }
  bool contains(NodeId v) const {
    return std::binary_search(nodes.begin(), nodes.end(), v);
  }

  friend bool operator==(const NodeSet&, const NodeSet&) = default;
};

inline NodeSet oplus(const NodeSet& x, const NodeSet& y) {
  NodeSet out;
  out.nodes.reserve(x.nodes.size() + y.nodes.size());
  std::set_union(x.nodes.begin(), x.nodes.end(), y.nodes.begin(), y.nodes.end(),
                 std::back_inserter(out.nodes));
  return out;
}

inline NodeSet scale(bool s, const NodeSet& x) { return s ? x : NodeSet{}; }

}  // namespace mbfkit
