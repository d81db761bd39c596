#pragma once

#include <cstddef>
#include <vector>

#include "mbfkit/common.hpp"
#include "mbfkit/distance_map.hpp"
#include "mbfkit/path_set.hpp"

namespace mbfkit {

/// Keeps entries whose node is flagged in `in_set` and whose value is at most
/// d, then the k smallest of those under (value, node id) order. The flag
/// vector is indexed by node id.
DistanceMap source_detection_filter(const DistanceMap& x,
                                    const std::vector<std::uint8_t>& in_set, Dist d,
                                    std::size_t k);

/// Scalar threshold: values above d burn out to +inf (bottom).
inline Dist fire_filter(Dist x, Dist d) { return x <= d ? x : kInf; }

/// Per start node, keeps the best paths that end at `target`: the k smallest
/// under (weight, lexicographic tuple) order, or with `distinct` the k
/// smallest distinct weights with the lexicographically smallest path each.
/// Paths not ending at `target` are dropped.
PathSet ksdp_filter(const PathSet& x, NodeId target, std::size_t k, bool distinct);

}  // namespace mbfkit
