#include "mbfkit/widest_map.hpp"

#include <algorithm>

namespace mbfkit {

WidestMap WidestMap::singleton(NodeId node, Dist value) {
  if (value <= 0) return {};
  return WidestMap{{{node, value}}};
}

Dist WidestMap::at(NodeId node) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), node,
                             [](const WidthEntry& e, NodeId n) { return e.node < n; });
  if (it != entries.end() && it->node == node) return it->value;
  return 0;
}

WidestMap oplus(const WidestMap& x, const WidestMap& y) {
  WidestMap out;
  out.entries.reserve(x.entries.size() + y.entries.size());
  auto a = x.entries.begin(), ae = x.entries.end();
  auto b = y.entries.begin(), be = y.entries.end();
  while (a != ae && b != be) {
    if (a->node < b->node) {
      out.entries.push_back(*a++);
    } else if (b->node < a->node) {
      out.entries.push_back(*b++);
    } else {
      out.entries.push_back({a->node, a->value > b->value ? a->value : b->value});
      ++a;
      ++b;
    }
  }
  out.entries.insert(out.entries.end(), a, ae);
  out.entries.insert(out.entries.end(), b, be);
  return out;
}

WidestMap scale(Dist s, const WidestMap& x) {
  if (s <= 0) return {};
  WidestMap out;
  out.entries.reserve(x.entries.size());
  for (const auto& e : x.entries)
    out.entries.push_back({e.node, s < e.value ? s : e.value});
  return out;
}

}  // namespace mbfkit
