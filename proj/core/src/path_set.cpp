#include "mbfkit/path_set.hpp"

#include <algorithm>

namespace mbfkit {

namespace {

bool repeats_any(const std::vector<NodeId>& base, const std::vector<NodeId>& tail) {
  for (NodeId t : tail)
    if (std::find(base.begin(), base.end(), t) != base.end()) return true;
  return false;
}

void keep_min(PathSet& out, std::vector<NodeId> path, Dist weight) {
  auto [it, inserted] = out.paths.emplace(std::move(path), weight);
  if (!inserted && weight < it->second) it->second = weight;
}

}  // namespace

PathSet PathSet::one(NodeId node_count) {
  PathSet out;
  for (NodeId v = 0; v < node_count; ++v) out.paths.emplace(std::vector<NodeId>{v}, 0.0);
  return out;
}

PathSet PathSet::single(std::vector<NodeId> path, Dist weight) {
  PathSet out;
  out.paths.emplace(std::move(path), weight);
  return out;
}

PathSet oplus(const PathSet& x, const PathSet& y) {
  PathSet out = x;
  for (const auto& [path, weight] : y.paths) keep_min(out, path, weight);
  return out;
}

PathSet odot(const PathSet& x, const PathSet& y) {
  PathSet out;
  for (const auto& [p, wp] : x.paths) {
    for (const auto& [q, wq] : y.paths) {
      if (p.back() != q.front()) continue;
      // Glue node appears once; any other shared node would make a loop.
      if (repeats_any(p, {q.begin() + 1, q.end()})) continue;
      std::vector<NodeId> joined;
      joined.reserve(p.size() + q.size() - 1);
      joined.insert(joined.end(), p.begin(), p.end());
      joined.insert(joined.end(), q.begin() + 1, q.end());
      keep_min(out, std::move(joined), wp + wq);
    }
  }
  return out;
}

}  // namespace mbfkit
