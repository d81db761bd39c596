#include "mbfkit/distance_map.hpp"

#include <algorithm>

namespace mbfkit {

DistanceMap DistanceMap::singleton(NodeId node, Dist value) {
  if (value == kInf) return {};
  return DistanceMap{{{node, value}}};
}

Dist DistanceMap::at(NodeId node) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), node,
                             [](const DistEntry& e, NodeId n) { return e.node < n; });
  if (it != entries.end() && it->node == node) return it->value;
  return kInf;
}

DistanceMap oplus(const DistanceMap& x, const DistanceMap& y) {
  DistanceMap out;
  out.entries.reserve(x.entries.size() + y.entries.size());
  auto a = x.entries.begin(), ae = x.entries.end();
  auto b = y.entries.begin(), be = y.entries.end();
  while (a != ae && b != be) {
    if (a->node < b->node) {
      out.entries.push_back(*a++);
    } else if (b->node < a->node) {
      out.entries.push_back(*b++);
    } else {
      out.entries.push_back({a->node, a->value < b->value ? a->value : b->value});
      ++a;
      ++b;
    }
  }
  out.entries.insert(out.entries.end(), a, ae);
  out.entries.insert(out.entries.end(), b, be);
  return out;
}

DistanceMap scale(Dist s, const DistanceMap& x) {
  if (s == kInf) return {};
  DistanceMap out;
  out.entries.reserve(x.entries.size());
  for (const auto& e : x.entries) out.entries.push_back({e.node, s + e.value});
  return out;
}

DistanceMap aggregate(const std::vector<DistanceMap>& parts) {
  std::size_t total = 0;
  for (const auto& p : parts) total += p.entries.size();
  std::vector<DistEntry> flat;
  flat.reserve(total);
  for (const auto& p : parts)
    flat.insert(flat.end(), p.entries.begin(), p.entries.end());
  std::sort(flat.begin(), flat.end(), [](const DistEntry& a, const DistEntry& b) {
    return a.node != b.node ? a.node < b.node : a.value < b.value;
  });
  DistanceMap out;
  out.entries.reserve(flat.size());
  for (const auto& e : flat) {
    if (out.entries.empty() || out.entries.back().node != e.node)
      out.entries.push_back(e);
  }
  return out;
}

}  // namespace mbfkit
