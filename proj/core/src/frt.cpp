#include "mbfkit/frt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "mbfkit/oracles.hpp"
#include "mbfkit/rng.hpp"

namespace mbfkit {

RandomOrder draw_random_order(NodeId n, std::uint64_t seed) {
  RandomOrder out;
  out.seed = seed;
  std::vector<NodeId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  auto perm_rng = named_stream(seed, "perm");
  std::shuffle(perm.begin(), perm.end(), perm_rng);
  out.rank.resize(n);
  for (NodeId pos = 0; pos < n; ++pos) out.rank[perm[pos]] = pos;
  auto beta_rng = named_stream(seed, "beta");
  out.beta = std::uniform_real_distribution<double>(1.0, 2.0)(beta_rng);
  return out;
}

DistanceMap le_filter(const DistanceMap& x, const std::vector<NodeId>& rank) {
  if (x.entries.size() <= 1) return x;
  std::vector<DistEntry> by_value(x.entries);
  for (const auto& e : by_value) {
    if (e.node >= rank.size()) throw InvariantError("entry node outside the order");
  }
  std::sort(by_value.begin(), by_value.end(), [&](const DistEntry& a, const DistEntry& b) {
    if (a.value != b.value) return a.value < b.value;
    return rank[a.node] < rank[b.node];
  });
  // An entry survives iff its rank undercuts everything at most as far away.
  std::vector<DistEntry> kept;
  kept.reserve(by_value.size());
  NodeId best_rank = 0;
  for (std::size_t i = 0; i < by_value.size(); ++i) {
    NodeId r = rank[by_value[i].node];
    if (i == 0 || r < best_rank) {
      kept.push_back(by_value[i]);
      best_rank = r;
    }
  }
  std::sort(kept.begin(), kept.end(),
            [](const DistEntry& a, const DistEntry& b) { return a.node < b.node; });
  return DistanceMap{std::move(kept)};
}

MbfAlgorithm<MinPlusModule> make_le_instance(NodeId n, const RandomOrder& order,
                                             const std::vector<NodeId>& sources) {
  if (order.rank.size() != n) throw InvariantError("order size does not match the graph");
  MbfAlgorithm<MinPlusModule> alg;
  alg.initial.resize(n);
  for (NodeId v : sources) {
    if (v >= n) throw InvariantError("embedded source out of range");
    alg.initial[v] = DistanceMap::singleton(v, 0);
  }
  auto rank = std::make_shared<std::vector<NodeId>>(order.rank);
  alg.filter = [rank](const DistanceMap& x) { return le_filter(x, *rank); };
  alg.hop_cap = static_cast<int>(n);
  return alg;
}

MbfAlgorithm<MinPlusModule> make_le_instance(NodeId n, const RandomOrder& order) {
  std::vector<NodeId> all(n);
  std::iota(all.begin(), all.end(), 0);
  return make_le_instance(n, order, all);
}

namespace {

LeList to_le_list(const DistanceMap& x) {
  LeList out;
  out.entries.reserve(x.entries.size());
  for (const auto& e : x.entries) out.entries.push_back({e.value, e.node});
  std::sort(out.entries.begin(), out.entries.end(), [](const LeEntry& a, const LeEntry& b) {
    if (a.distance != b.distance) return a.distance < b.distance;
    return a.node < b.node;
  });
  return out;
}

}  // namespace

LePipeline compute_le_lists(const WeightedGraph& g, const EmbedConfig& cfg) {
  NodeId n = g.node_count();
  if (n == 0) throw InvariantError("cannot embed an empty graph");
  if (!g.is_connected())
    throw InvariantError("embedding requires a connected graph");

  LePipeline pipe;
  pipe.eps_hat = cfg.eps_hat > 0 ? cfg.eps_hat : default_eps_hat(n);
  pipe.d = cfg.d > 0 ? cfg.d : default_hop_budget(n);

  std::string suffix = "." + std::to_string(cfg.sample_index);
  auto choice = choose_hopset(g, cfg.hopset, pipe.d, pipe.eps_hat,
                              derive_seed(cfg.seed, "hopset" + suffix), cfg.verify_cap);
  pipe.gprime = std::move(choice.gprime);
  pipe.d = choice.d;
  pipe.hopset_fell_back = choice.fell_back;

  LevelAssignment levels = sample_levels(n, derive_seed(cfg.seed, "levels" + suffix));
  pipe.order = draw_random_order(n, derive_seed(cfg.seed, "order" + suffix));
  pipe.sim = make_simulated_graph(*pipe.gprime, std::move(levels), pipe.d, pipe.eps_hat);

  std::vector<NodeId> sources = cfg.sources;
  if (sources.empty()) {
    sources.resize(n);
    std::iota(sources.begin(), sources.end(), 0);
  }
  auto alg = make_le_instance(n, pipe.order, sources);
  if (cfg.record_traces) pipe.trace = std::make_shared<MinPlusTrace>();
  auto res = oracle_run<MinPlusModule>(pipe.sim, alg, cfg.cap_const, pipe.trace.get());
  pipe.iterations = res.iterations;

  pipe.lists.assign(n, {});
  for (NodeId v : sources) pipe.lists[v] = to_le_list(res.state[v]);

  pipe.min_pair_distance = kInf;
  pipe.max_pair_distance = 0;
  for (NodeId v : sources) {
    for (const auto& e : pipe.lists[v].entries) {
      if (e.distance > 0) {
        pipe.min_pair_distance = std::min(pipe.min_pair_distance, e.distance);
        pipe.max_pair_distance = std::max(pipe.max_pair_distance, e.distance);
      }
    }
  }
  if (pipe.min_pair_distance == kInf) pipe.min_pair_distance = 0;  // single source
  return pipe;
}

namespace {

// Smallest i with beta * 2^i >= target; target > 0, beta in [1, 2).
int smallest_scale_index(double beta, double target) {
  int i = static_cast<int>(std::ceil(std::log2(target / beta)));
  while (std::ldexp(beta, i) < target) ++i;
  while (std::ldexp(beta, i - 1) >= target) --i;
  return i;
}

void validate_list(const LeList& list, NodeId v, const std::vector<NodeId>& rank) {
  if (list.entries.empty()) throw InvariantError("leaf has an empty list");
  if (list.entries.front().distance != 0 || list.entries.front().node != v)
    throw InvariantError("list must start with the node itself at distance 0");
  for (std::size_t j = 1; j < list.entries.size(); ++j) {
    if (!(list.entries[j].distance > list.entries[j - 1].distance) ||
        !(rank[list.entries[j].node] < rank[list.entries[j - 1].node]))
      throw InvariantError("list entries must ascend in distance and descend in rank");
  }
}

}  // namespace

FrtTree build_frt_tree(const std::vector<LeList>& lists, const RandomOrder& order,
                       Dist min_dist, Dist max_dist) {
  FrtTree t;
  t.beta = order.beta;
  t.leaf_index.assign(lists.size(), -1);

  std::vector<NodeId> leaves;
  for (NodeId v = 0; v < lists.size(); ++v)
    if (!lists[v].empty()) leaves.push_back(v);
  if (leaves.empty()) throw InvariantError("no lists to build a tree from");

  if (leaves.size() == 1) {
    t.nodes.push_back({-1, 0, 0, leaves[0], leaves[0], static_cast<int>(leaves[0])});
    t.leaf_index[leaves[0]] = 0;
    t.root = 0;
    return t;
  }
  if (!(min_dist > 0) || !(max_dist >= min_dist) || max_dist == kInf)
    throw InvariantError("scale grid needs finite positive distance extremes");

  // One singleton level at the bottom, one all-covering level at the top.
  t.i_min = smallest_scale_index(order.beta, min_dist / 2);
  int i_top = smallest_scale_index(order.beta, max_dist);
  int k = i_top - t.i_min;
  t.level_count = k + 1;
  std::vector<double> radius(k + 1);
  for (int s = 0; s <= k; ++s) radius[s] = std::ldexp(order.beta, t.i_min + s);

  std::map<std::vector<NodeId>, int> suffix_index;
  std::vector<NodeId> tuple(k + 1);
  for (NodeId v : leaves) {
    const LeList& list = lists[v];
    validate_list(list, v, order.rank);
    // Each grid radius picks the deepest entry within it; entries ascend, so
    // entry j covers radii in [d_j, d_{j+1}).
    for (std::size_t j = 0; j < list.entries.size(); ++j) {
      double dj = list.entries[j].distance;
      double dnext =
          j + 1 < list.entries.size() ? list.entries[j + 1].distance : kInf;
      for (int s = 0; s <= k; ++s)
        if (dj <= radius[s] && radius[s] < dnext) tuple[s] = list.entries[j].node;
    }
    // The bottom level is a singleton ball and the top ball covers the list.
    if (tuple[0] != v)
      throw InvariantError("scale grid failed to isolate a leaf; extremes too coarse");

    int parent = -1;
    for (int s = k; s >= 0; --s) {
      std::vector<NodeId> suffix(tuple.begin() + s, tuple.end());
      auto [it, inserted] = suffix_index.try_emplace(std::move(suffix),
                                                     static_cast<int>(t.nodes.size()));
      if (inserted) {
        FrtTree::Node nd;
        nd.parent = parent;
        nd.parent_weight = parent < 0 ? 0 : std::ldexp(order.beta, t.i_min + s + 1);
        nd.level = s;
        nd.head = tuple[s];
        nd.repr_leaf = std::numeric_limits<NodeId>::max();
        t.nodes.push_back(nd);
      }
      parent = it->second;
    }
    if (t.nodes[parent].leaf_graph_node >= 0)
      throw InvariantError("two nodes collapsed onto one leaf tuple");
    t.nodes[parent].leaf_graph_node = static_cast<int>(v);
    t.leaf_index[v] = parent;
  }

  int roots = 0;
  for (const auto& nd : t.nodes) {
    if (nd.parent < 0) {
      t.root = static_cast<int>(&nd - t.nodes.data());
      ++roots;
    }
  }
  if (roots != 1)
    throw InvariantError("scale grid did not produce a single root");

  for (NodeId v : leaves) {
    for (int a = t.leaf_index[v]; a >= 0; a = t.nodes[a].parent)
      t.nodes[a].repr_leaf = std::min(t.nodes[a].repr_leaf, v);
  }
  return t;
}

Dist tree_distance(const FrtTree& t, NodeId v, NodeId w) {
  if (v >= t.leaf_index.size() || t.leaf_index[v] < 0 || w >= t.leaf_index.size() ||
      t.leaf_index[w] < 0)
    throw InvariantError("node is not a leaf of this tree");
  if (v == w) return 0;
  int a = t.leaf_index[v];
  int b = t.leaf_index[w];
  Dist total = 0;
  while (a != b) {
    // Leaves share a depth, so the walks stay level-aligned.
    total += t.nodes[a].parent_weight + t.nodes[b].parent_weight;
    a = t.nodes[a].parent;
    b = t.nodes[b].parent;
    if (a < 0 || b < 0) throw InvariantError("leaves do not share a root");
  }
  return total;
}

StretchReport stretch_report(const FrtTree& t, const WeightedGraph& g) {
  StretchReport rep;
  std::vector<NodeId> leaves;
  for (NodeId v = 0; v < t.leaf_index.size(); ++v)
    if (t.leaf_index[v] >= 0) leaves.push_back(v);
  double sum = 0;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    auto dist = dijkstra(g, leaves[i]);
    for (std::size_t j = i + 1; j < leaves.size(); ++j) {
      Dist dg = dist[leaves[j]];
      if (dg <= 0 || dg == kInf) throw InvariantError("graph distance unavailable");
      Dist dt = tree_distance(t, leaves[i], leaves[j]);
      double ratio = dt / dg;
      sum += ratio;
      rep.max_stretch = std::max(rep.max_stretch, ratio);
      if (dt < dg) ++rep.dominated_pairs;
      ++rep.pair_count;
    }
  }
  if (rep.pair_count > 0) rep.mean_stretch = sum / static_cast<double>(rep.pair_count);
  return rep;
}

std::vector<NodeId> trace_gprime_path(const LePipeline& pipe, NodeId from, NodeId target) {
  if (!pipe.trace) throw InvariantError("pipeline did not record traces");
  const MinPlusTrace& tr = *pipe.trace;
  if (tr.states.empty()) throw InvariantError("trace is empty");
  const WeightedGraph& gc = pipe.gprime->combined();
  const auto& levels = pipe.sim.levels;

  std::vector<NodeId> path{from};
  NodeId cur = from;
  Dist value = tr.states.back()[cur].at(target);
  if (value == kInf) throw InvariantError("target is not in the final list");

  for (std::size_t it = tr.iterations.size(); it-- > 0;) {
    if (tr.states[it][cur].at(target) == value) continue;  // settled earlier
    const auto& iter = tr.iterations[it];
    bool explained = false;
    for (std::size_t lambda = 0; lambda < iter.levels.size() && !explained; ++lambda) {
      if (levels.level[cur] < static_cast<int>(lambda)) continue;
      const auto& hops = iter.levels[lambda].hops;
      if (hops.empty() || hops.back()[cur].at(target) != value) continue;
      double sigma = pipe.sim.sigma[lambda];
      NodeId node = cur;
      // Walk the level block backwards; each step either stays (the value
      // already existed one hop earlier) or crosses the unique kind of edge
      // that reproduces the value bit for bit.
      for (std::size_t f = hops.size() - 1; f > 0;) {
        if (hops[f - 1][node].at(target) == value) {
          --f;
          continue;
        }
        bool hopped = false;
        for (const Edge& e : gc.neighbors(node)) {
          Dist below = hops[f - 1][e.to].at(target);
          if (below == kInf) continue;
          if (sigma * e.weight + below == value) {
            path.push_back(e.to);
            node = e.to;
            value = below;
            hopped = true;
            break;
          }
        }
        if (!hopped) throw InvariantError("trace replay lost the value inside a level");
        --f;
      }
      if (hops.front()[node].at(target) != value)
        throw InvariantError("trace replay did not reach the level entry state");
      cur = node;
      explained = true;
    }
    if (!explained) throw InvariantError("no level explains a traced value");
  }
  if (cur != target || value != 0)
    throw InvariantError("trace replay did not terminate at the target");
  return path;
}

ReconstructedPath reconstruct_path(const FrtTree& t, int tree_node, const LePipeline& pipe) {
  if (tree_node < 0 || tree_node >= static_cast<int>(t.nodes.size()))
    throw InvariantError("tree node out of range");
  const auto& nd = t.nodes[tree_node];
  if (nd.parent < 0) throw InvariantError("the root has no parent edge");
  NodeId z = nd.repr_leaf;
  NodeId lo = nd.head;
  NodeId hi = t.nodes[nd.parent].head;

  ReconstructedPath out;
  const WeightedGraph& base = pipe.gprime->base();
  if (lo == hi) {
    out.nodes = {lo};
    return out;
  }

  // Both ball centers sit on the descendant leaf's list; route through it.
  std::vector<NodeId> down = trace_gprime_path(pipe, z, lo);
  std::vector<NodeId> up = trace_gprime_path(pipe, z, hi);
  std::vector<NodeId> walk(down.rbegin(), down.rend());
  walk.insert(walk.end(), up.begin() + 1, up.end());

  out.nodes.push_back(walk.front());
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    std::vector<NodeId> seg = pipe.gprime->expand(walk[i], walk[i + 1]);
    out.nodes.insert(out.nodes.end(), seg.begin() + 1, seg.end());
  }
  for (std::size_t i = 0; i + 1 < out.nodes.size(); ++i) {
    Dist w = base.weight(out.nodes[i], out.nodes[i + 1]);
    if (w == kInf) throw InvariantError("reconstructed walk uses a non-edge");
    out.weight += w;
  }
  return out;
}

}  // namespace mbfkit
