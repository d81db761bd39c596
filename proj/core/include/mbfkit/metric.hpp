#pragma once

#include <vector>

#include "mbfkit/frt.hpp"

namespace mbfkit {

/// Tabulated metric of the simulated graph: a genuine graph metric, so the
/// triangle inequality holds, and it bounds the base metric from above by at
/// most bound_factor.
struct ApproxMetric {
  NodeId n = 0;
  std::vector<Dist> table;  // row-major, symmetric, zero diagonal
  double bound_factor = kInf;
  int lambda_max = 0;
  double eps_hat = 0;

  Dist at(NodeId u, NodeId v) const {
    return table[static_cast<std::size_t>(u) * n + v];
  }
};

/// All-pairs run through the oracle. Guarded to `cap` nodes; the table is
/// quadratic. bound_factor is (1+eps)^(lambda_max+1) times the certified
/// hopset ratio, or infinity when the hopset could not be certified.
ApproxMetric approx_metric(const WeightedGraph& g, const EmbedConfig& cfg, NodeId cap = 4096);

}  // namespace mbfkit
