#include "mbfkit/graph.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mbfkit {

namespace {
// Weight ratios beyond n^4 degrade the level construction's guarantees.
constexpr double kRatioExponent = 4.0;
}  // namespace

WeightedGraph::WeightedGraph(NodeId n, const std::vector<EdgeTriple>& edges,
                             std::vector<std::string>* warnings) {
  n_ = n;
  std::vector<EdgeTriple> canon;
  canon.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n) {
      std::ostringstream msg;
      msg << "edge (" << e.u << ", " << e.v << ") references a node >= " << n;
      throw InvariantError(msg.str());
    }
    if (e.u == e.v) {
      std::ostringstream msg;
      msg << "self loop at node " << e.u;
      throw InvariantError(msg.str());
    }
    if (!(e.weight > 0) || !std::isfinite(e.weight)) {
      std::ostringstream msg;
      msg << "edge (" << e.u << ", " << e.v << ") has non-positive or non-finite weight";
      throw InvariantError(msg.str());
    }
    canon.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.weight});
  }

  std::sort(canon.begin(), canon.end(), [](const EdgeTriple& a, const EdgeTriple& b) {
    if (a.u != b.u) return a.u < b.u;
    if (a.v != b.v) return a.v < b.v;
    return a.weight < b.weight;
  });

  std::vector<EdgeTriple> collapsed;
  collapsed.reserve(canon.size());
  std::size_t dropped = 0;
  for (const auto& e : canon) {
    if (!collapsed.empty() && collapsed.back().u == e.u && collapsed.back().v == e.v) {
      ++dropped;  // sorted by weight, first one already holds the minimum
      continue;
    }
    collapsed.push_back(e);
  }
  if (dropped > 0 && warnings) {
    std::ostringstream msg;
    msg << "collapsed " << dropped << " parallel edge(s) to their minimum weight";
    warnings->push_back(msg.str());
  }

  m_ = collapsed.size();
  std::vector<std::size_t> degree(n_, 0);
  for (const auto& e : collapsed) {
    ++degree[e.u];
    ++degree[e.v];
    wmin_ = std::min(wmin_, e.weight);
    wmax_ = std::max(wmax_, e.weight);
  }
  offsets_.assign(n_ + 1, 0);
  for (NodeId v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adj_.resize(offsets_[n_]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& e : collapsed) {
    adj_[cursor[e.u]++] = {e.v, e.weight};
    adj_[cursor[e.v]++] = {e.u, e.weight};
  }
  for (NodeId v = 0; v < n_; ++v) {
    std::sort(adj_.begin() + offsets_[v], adj_.begin() + offsets_[v + 1],
              [](const Edge& a, const Edge& b) { return a.to < b.to; });
  }

  if (warnings && m_ > 0 && n_ > 1 &&
      wmax_ / wmin_ > std::pow(static_cast<double>(n_), kRatioExponent)) {
    std::ostringstream msg;
    msg << "weight ratio " << wmax_ / wmin_ << " exceeds n^" << kRatioExponent
        << "; level scales may degenerate";
    warnings->push_back(msg.str());
  }
}

Dist WeightedGraph::weight(NodeId u, NodeId v) const {
  auto nb = neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v,
                             [](const Edge& e, NodeId n) { return e.to < n; });
  if (it != nb.end() && it->to == v) return it->weight;
  return kInf;
}

bool WeightedGraph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<std::uint8_t> seen(n_, 0);
  std::vector<NodeId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    for (const Edge& e : neighbors(v)) {
      if (!seen[e.to]) {
        seen[e.to] = 1;
        ++reached;
        stack.push_back(e.to);
      }
    }
  }
  return reached == n_;
}

std::vector<EdgeTriple> WeightedGraph::edges() const {
  std::vector<EdgeTriple> out;
  out.reserve(m_);
  for (NodeId v = 0; v < n_; ++v)
    for (const Edge& e : neighbors(v))
      if (v < e.to) out.push_back({v, e.to, e.weight});
  return out;
}

}  // namespace mbfkit
