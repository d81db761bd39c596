#pragma once

#include "mbfkit/common.hpp"
#include "mbfkit/distance_map.hpp"
#include "mbfkit/node_set.hpp"
#include "mbfkit/path_set.hpp"
#include "mbfkit/widest_map.hpp"

namespace mbfkit {

/// Module bindings consumed by the engine templates. Each type fixes the
/// element carrier, the scalar acting on it, and how a graph edge turns into
/// a scalar. kSupportsStretch marks the modules whose scalars may be
/// multiplied by a per-edge stretch factor; the others require stretch 1.

struct MinPlusModule {
  using Elem = DistanceMap;
  using Scalar = Dist;
  static constexpr bool kSupportsStretch = true;

  static Elem bottom() { return DistanceMap::bottom(); }
  static Elem oplus(const Elem& x, const Elem& y) { return mbfkit::oplus(x, y); }
  static Elem scale(Scalar s, const Elem& x) { return mbfkit::scale(s, x); }
  static Scalar edge_scalar(double stretch, NodeId, NodeId, Dist w) { return stretch * w; }
  static std::size_t size(const Elem& x) { return x.size(); }
};

struct ScalarMinPlusModule {
  using Elem = Dist;
  using Scalar = Dist;
  static constexpr bool kSupportsStretch = true;

  static Elem bottom() { return kInf; }
  static Elem oplus(Elem x, Elem y) { return x < y ? x : y; }
  static Elem scale(Scalar s, Elem x) { return s + x; }
  static Scalar edge_scalar(double stretch, NodeId, NodeId, Dist w) { return stretch * w; }
  static std::size_t size(Elem) { return 1; }
};

struct MaxMinModule {
  using Elem = WidestMap;
  using Scalar = Dist;
  static constexpr bool kSupportsStretch = false;

  static Elem bottom() { return WidestMap::bottom(); }
  static Elem oplus(const Elem& x, const Elem& y) { return mbfkit::oplus(x, y); }
  static Elem scale(Scalar s, const Elem& x) { return mbfkit::scale(s, x); }
  static Scalar edge_scalar(double, NodeId, NodeId, Dist w) { return w; }
  static std::size_t size(const Elem& x) { return x.size(); }
};

struct ScalarMaxMinModule {
  using Elem = Dist;
  using Scalar = Dist;
  static constexpr bool kSupportsStretch = false;

  static Elem bottom() { return 0; }
  static Elem oplus(Elem x, Elem y) { return x > y ? x : y; }
  static Elem scale(Scalar s, Elem x) { return s < x ? s : x; }
  static Scalar edge_scalar(double, NodeId, NodeId, Dist w) { return w; }
  static std::size_t size(Elem) { return 1; }
};

struct AllPathsModule {
  using Elem = PathSet;
  using Scalar = PathSet;
  static constexpr bool kSupportsStretch = false;

  static Elem bottom() { return PathSet::bottom(); }
  static Elem oplus(const Elem& x, const Elem& y) { return mbfkit::oplus(x, y); }
  static Elem scale(const Scalar& s, const Elem& x) { return mbfkit::odot(s, x); }
  static Scalar edge_scalar(double, NodeId v, NodeId w, Dist weight) {
    return PathSet::single({v, w}, weight);
  }
  static std::size_t size(const Elem& x) { return x.size(); }
};

struct BoolModule {
  using Elem = NodeSet;
  using Scalar = bool;
  static constexpr bool kSupportsStretch = false;

  static Elem bottom() { return NodeSet::bottom(); }
  static Elem oplus(const Elem& x, const Elem& y) { return mbfkit::oplus(x, y); }
  static Elem scale(Scalar s, const Elem& x) { return mbfkit::scale(s, x); }
  static Scalar edge_scalar(double, NodeId, NodeId, Dist) { return true; }
  static std::size_t size(const Elem& x) { return x.size(); }
};

}  // namespace mbfkit
