#pragma once

#include <memory>
#include <vector>

#include "mbfkit/engine.hpp"
#include "mbfkit/filters.hpp"

namespace mbfkit {

/// Instance builders. Each returns a ready-to-run algorithm description for
/// a graph with n nodes; hop caps default to n, which always covers the
/// fixpoint plus its confirmation step.

namespace detail {

inline void check_nodes(NodeId n, const std::vector<NodeId>& nodes, const char* what) {
  for (NodeId v : nodes) {
    if (v >= n) throw InvariantError(std::string(what) + " node out of range");
  }
}

inline std::shared_ptr<std::vector<std::uint8_t>> flag_set(NodeId n,
                                                           const std::vector<NodeId>& nodes) {
  auto flags = std::make_shared<std::vector<std::uint8_t>>(n, 0);
  for (NodeId v : nodes) (*flags)[v] = 1;
  return flags;
}

}  // namespace detail

/// All-pairs shortest paths: identity filter, x(0) = own node at 0.
inline MbfAlgorithm<MinPlusModule> make_apsp(NodeId n) {
  MbfAlgorithm<MinPlusModule> alg;
  alg.initial.resize(n);
  for (NodeId v = 0; v < n; ++v) alg.initial[v] = DistanceMap::singleton(v, 0);
  alg.hop_cap = static_cast<int>(n);
  return alg;
}

/// Single-source shortest paths on the scalar carrier.
inline MbfAlgorithm<ScalarMinPlusModule> make_sssp(NodeId n, NodeId source) {
  if (source >= n) throw InvariantError("sssp source out of range");
  MbfAlgorithm<ScalarMinPlusModule> alg;
  alg.initial.assign(n, kInf);
  alg.initial[source] = 0;
  alg.hop_cap = static_cast<int>(n);
  return alg;
}

/// Detect the k nearest members of `sources` within distance d.
inline MbfAlgorithm<MinPlusModule> make_source_detection(NodeId n,
                                                         const std::vector<NodeId>& sources,
                                                         Dist d, std::size_t k) {
  detail::check_nodes(n, sources, "source detection");
  if (d < 0) throw InvariantError("source detection radius must be non-negative");
  MbfAlgorithm<MinPlusModule> alg;
  alg.initial.resize(n);
  for (NodeId v : sources) alg.initial[v] = DistanceMap::singleton(v, 0);
  auto flags = detail::flag_set(n, sources);
  alg.filter = [flags, d, k](const DistanceMap& x) {
    return source_detection_filter(x, *flags, d, k);
  };
  alg.hop_cap = static_cast<int>(n);
  return alg;
}

/// k nearest nodes overall: source detection from everywhere, unbounded radius.
inline MbfAlgorithm<MinPlusModule> make_kssp(NodeId n, std::size_t k) {
  if (k == 0) throw InvariantError("kssp needs k >= 1");
  std::vector<NodeId> all(n);
  for (NodeId v = 0; v < n; ++v) all[v] = v;
  return make_source_detection(n, all, kInf, k);
}

/// Distances to every member of S, no pruning.
inline MbfAlgorithm<MinPlusModule> make_mssp(NodeId n, const std::vector<NodeId>& sources) {
  return make_source_detection(n, sources, kInf, sources.size());
}

/// Burning-front distances, truncated beyond d.
inline MbfAlgorithm<ScalarMinPlusModule> make_fire(NodeId n,
                                                   const std::vector<NodeId>& burning,
                                                   Dist d) {
  detail::check_nodes(n, burning, "fire");
  if (d < 0) throw InvariantError("fire radius must be non-negative");
  MbfAlgorithm<ScalarMinPlusModule> alg;
  alg.initial.assign(n, kInf);
  for (NodeId v : burning) alg.initial[v] = 0;
  alg.filter = [d](Dist x) { return fire_filter(x, d); };
  alg.hop_cap = static_cast<int>(n);
  return alg;
}

/// Single-source widest paths on the scalar max-min carrier.
inline MbfAlgorithm<ScalarMaxMinModule> make_sswp(NodeId n, NodeId source) {
  if (source >= n) throw InvariantError("sswp source out of range");
  MbfAlgorithm<ScalarMaxMinModule> alg;
  alg.initial.assign(n, 0);
  alg.initial[source] = kInf;
  alg.hop_cap = static_cast<int>(n);
  return alg;
}

/// All-pairs widest paths.
inline MbfAlgorithm<MaxMinModule> make_apwp(NodeId n) {
  MbfAlgorithm<MaxMinModule> alg;
  alg.initial.resize(n);
  for (NodeId v = 0; v < n; ++v) alg.initial[v] = WidestMap::singleton(v, kInf);
  alg.hop_cap = static_cast<int>(n);
  return alg;
}

/// Widest paths towards every member of S.
inline MbfAlgorithm<MaxMinModule> make_mswp(NodeId n, const std::vector<NodeId>& sources) {
  detail::check_nodes(n, sources, "mswp");
  MbfAlgorithm<MaxMinModule> alg;
  alg.initial.resize(n);
  for (NodeId v : sources) alg.initial[v] = WidestMap::singleton(v, kInf);
  alg.hop_cap = static_cast<int>(n);
  return alg;
}

/// k shortest (or k shortest distinct-weight) loop-free paths to `target`
/// within h hops. elem_cap bounds intermediate path sets. The selection runs
/// once at the end: truncating mid-run picks one path per tied weight, and a
/// dropped tied path can be the only one whose extension stays loop-free.
inline MbfAlgorithm<AllPathsModule> make_ksdp(NodeId n, NodeId target, std::size_t k,
                                              bool distinct, int h,
                                              std::size_t cap = 1'000'000) {
  if (target >= n) throw InvariantError("ksdp target out of range");
  if (k == 0) throw InvariantError("ksdp needs k >= 1");
  if (h < 0) throw InvariantError("ksdp hop budget must be non-negative");
  MbfAlgorithm<AllPathsModule> alg;
  alg.initial.resize(n);
  for (NodeId v = 0; v < n; ++v) alg.initial[v] = PathSet::single({v}, 0);
  alg.filter = [target, k, distinct](const PathSet& x) {
    return ksdp_filter(x, target, k, distinct);
  };
  alg.hop_cap = h;
  alg.elem_cap = cap;
  alg.filter_at_end = true;
  return alg;
}

/// h-hop reachability sets; h = 0 picks the full horizon n.
inline MbfAlgorithm<BoolModule> make_connectivity(NodeId n, int h = 0) {
  if (h < 0) throw InvariantError("connectivity hop budget must be non-negative");
  MbfAlgorithm<BoolModule> alg;
  alg.initial.resize(n);
  for (NodeId v = 0; v < n; ++v) alg.initial[v] = NodeSet::singleton(v);
  alg.hop_cap = h > 0 ? h : static_cast<int>(n);
  return alg;
}

}  // namespace mbfkit
