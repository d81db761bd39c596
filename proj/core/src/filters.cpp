#include "mbfkit/filters.hpp"

#include <algorithm>

namespace mbfkit {

DistanceMap source_detection_filter(const DistanceMap& x,
                                    const std::vector<std::uint8_t>& in_set, Dist d,
                                    std::size_t k) {
  std::vector<DistEntry> kept;
  kept.reserve(x.entries.size());
  for (const auto& e : x.entries) {
    if (e.node < in_set.size() && in_set[e.node] && e.value <= d) kept.push_back(e);
  }
  if (kept.size() > k) {
    auto by_value = [](const DistEntry& a, const DistEntry& b) {
      return a.value != b.value ? a.value < b.value : a.node < b.node;
    };
    std::nth_element(kept.begin(), kept.begin() + (k - 1), kept.end(), by_value);
    kept.resize(k);
    std::sort(kept.begin(), kept.end(),
              [](const DistEntry& a, const DistEntry& b) { return a.node < b.node; });
  }
  return DistanceMap{std::move(kept)};
}

PathSet ksdp_filter(const PathSet& x, NodeId target, std::size_t k, bool distinct) {
  PathSet out;
  auto it = x.paths.begin();
  while (it != x.paths.end()) {
    NodeId start = it->first.front();
    // Map order is lexicographic, so one start's paths are contiguous and
    // already tie-ordered; a stable sort by weight preserves that order.
    std::vector<std::pair<Dist, const std::vector<NodeId>*>> group;
    for (; it != x.paths.end() && it->first.front() == start; ++it) {
      if (it->first.back() == target) group.push_back({it->second, &it->first});
    }
    std::stable_sort(group.begin(), group.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    if (!distinct) {
      for (std::size_t i = 0; i < group.size() && i < k; ++i)
        out.paths.emplace(*group[i].second, group[i].first);
    } else {
      std::size_t weights_taken = 0;
      for (std::size_t i = 0; i < group.size() && weights_taken < k; ++i) {
        if (i > 0 && group[i].first == group[i - 1].first) continue;
        ++weights_taken;
        out.paths.emplace(*group[i].second, group[i].first);
      }
    }
  }
  return out;
}

}  // namespace mbfkit
