#pragma once

#include <vector>

#include "mbfkit/frt.hpp"

namespace mbfkit {

struct CableType {
  double capacity = 1;  // units one copy carries
  double cost = 1;      // price per unit of edge length
};

struct Demand {
  NodeId s = 0;
  NodeId t = 0;
  double amount = 0;
};

struct BabInstall {
  NodeId u = 0;
  NodeId v = 0;
  int cable = 0;
  long long multiplicity = 0;

  friend bool operator==(const BabInstall&, const BabInstall&) = default;
};

struct BabResult {
  std::vector<BabInstall> installs;  // sorted by (u, v, cable)
  double cost = 0;                   // priced on base graph edge lengths
  double tree_cost = 0;              // the same cable plan priced on the tree
};

/// Routes every demand along its tree path in one sampled embedding, picks
/// the single cheapest cable type per tree edge at the accumulated flow, and
/// installs that choice on the base-graph walk the tree edge expands to.
/// Installed capacity covers every crossing by construction.
BabResult buy_at_bulk(const WeightedGraph& g, const std::vector<Demand>& demands,
                      const std::vector<CableType>& cables, const EmbedConfig& cfg);

}  // namespace mbfkit
