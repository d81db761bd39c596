#include "mbfkit/kmedian.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <numeric>
#include <string>
#include <tuple>

#include "mbfkit/instances.hpp"
#include "mbfkit/oracles.hpp"
#include "mbfkit/rng.hpp"

namespace mbfkit {

std::vector<NodeId> kmedian_candidates(const SimulatedGraphH& sim, NodeId k,
                                       std::uint64_t seed, int cap_const) {
  NodeId n = sim.node_count();
  if (k == 0 || k > n) throw InvariantError("k must be between 1 and the node count");

  std::vector<NodeId> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<char> chosen(n, 0);
  double ln_n = std::log(static_cast<double>(n));
  NodeId per_round = std::max<NodeId>(
      1, static_cast<NodeId>(std::ceil(3.0 * static_cast<double>(k) * ln_n)));

  int guard = 2 * ceil_log2(n < 2 ? 2 : n) + 8;
  for (int round = 0;; ++round) {
    if (round > guard)
      throw InvariantError("candidate sampling failed to shrink the pool");
    NodeId cnt = std::min<NodeId>(per_round, static_cast<NodeId>(pool.size()));
    std::vector<NodeId> sampled;
    auto rng = named_stream(seed, "kmedian.round." + std::to_string(round));
    std::sample(pool.begin(), pool.end(), std::back_inserter(sampled), cnt, rng);
    for (NodeId v : sampled) chosen[v] = 1;
    if (sampled.size() == pool.size()) break;

    auto alg = make_fire(n, sampled, kInf);
    auto res = oracle_run<ScalarMinPlusModule>(sim, alg, cap_const);
    std::vector<NodeId> by_dist(pool);
    std::sort(by_dist.begin(), by_dist.end(), [&](NodeId a, NodeId b) {
      if (res.state[a] != res.state[b]) return res.state[a] < res.state[b];
      return a < b;
    });
    std::vector<char> retired(n, 0);
    for (std::size_t i = 0; i < pool.size() / 2; ++i) retired[by_dist[i]] = 1;
    std::vector<NodeId> next;
    next.reserve(pool.size() - pool.size() / 2);
    for (NodeId v : pool)
      if (!retired[v]) next.push_back(v);
    pool = std::move(next);
  }

  std::vector<NodeId> q;
  for (NodeId v = 0; v < n; ++v)
    if (chosen[v]) q.push_back(v);
  return q;
}

BinaryTree binarize_tree(const FrtTree& t) {
  std::vector<std::vector<int>> kids(t.nodes.size());
  for (std::size_t i = 0; i < t.nodes.size(); ++i)
    if (t.nodes[i].parent >= 0) kids[t.nodes[i].parent].push_back(static_cast<int>(i));

  BinaryTree bt;
  bt.leaf_index.assign(t.leaf_index.size(), -1);

  auto join = [&bt](int l, Dist wl, int r, Dist wr) {
    int idx = static_cast<int>(bt.nodes.size());
    bt.nodes.push_back({});
    bt.nodes[idx].left = l;
    bt.nodes[idx].right = r;
    bt.nodes[l].parent = idx;
    bt.nodes[l].parent_weight = wl;
    bt.nodes[r].parent = idx;
    bt.nodes[r].parent_weight = wr;
    return idx;
  };

  // Returns the binary node and the weight of any collapsed unary chain
  // above it; the caller adds that to its own edge.
  auto rec = [&](auto&& self, int fi) -> std::pair<int, Dist> {
    if (kids[fi].empty()) {
      if (t.nodes[fi].leaf_graph_node < 0)
        throw InvariantError("childless internal node in the tree");
      int idx = static_cast<int>(bt.nodes.size());
      bt.nodes.push_back({});
      bt.nodes[idx].leaf_graph_node = t.nodes[fi].leaf_graph_node;
      bt.leaf_index[t.nodes[fi].leaf_graph_node] = idx;
      return {idx, 0};
    }
    if (kids[fi].size() == 1) {
      int c = kids[fi][0];
      auto [idx, extra] = self(self, c);
      return {idx, extra + t.nodes[c].parent_weight};
    }
    int cur = -1;
    Dist cur_w = 0;
    for (std::size_t q = 0; q < kids[fi].size(); ++q) {
      int c = kids[fi][q];
      auto [idx, extra] = self(self, c);
      Dist w = t.nodes[c].parent_weight + extra;
      if (q == 0) {
        cur = idx;
        cur_w = w;
      } else {
        cur = join(cur, cur_w, idx, w);
        cur_w = 0;
      }
    }
    return {cur, 0};
  };

  if (t.root < 0) throw InvariantError("tree has no root");
  bt.root = rec(rec, t.root).first;

  int counter = 0;
  std::vector<std::pair<int, int>> stack{{bt.root, 0}};
  while (!stack.empty()) {
    auto [x, phase] = stack.back();
    stack.pop_back();
    auto& nd = bt.nodes[x];
    if (phase == 0) {
      nd.tin = counter++;
      stack.push_back({x, 1});
      if (nd.left >= 0) {
        bt.nodes[nd.left].depth = nd.depth + 1;
        bt.nodes[nd.right].depth = nd.depth + 1;
        stack.push_back({nd.right, 0});
        stack.push_back({nd.left, 0});
      }
    } else {
      nd.tout = counter;
    }
  }
  return bt;
}

Dist binary_tree_distance(const BinaryTree& t, int a, int b) {
  if (a < 0 || b < 0 || a >= static_cast<int>(t.nodes.size()) ||
      b >= static_cast<int>(t.nodes.size()))
    throw InvariantError("tree node out of range");
  Dist total = 0;
  while (a != b) {
    if (t.nodes[a].depth >= t.nodes[b].depth) {
      total += t.nodes[a].parent_weight;
      a = t.nodes[a].parent;
    } else {
      total += t.nodes[b].parent_weight;
      b = t.nodes[b].parent;
    }
    if (a < 0 || b < 0) throw InvariantError("nodes do not share a root");
  }
  return total;
}

TreeKMedian kmedian_tree_dp(const BinaryTree& bt, const std::vector<NodeId>& candidates,
                            NodeId k) {
  if (k == 0) throw InvariantError("k must be positive");
  std::vector<NodeId> cand(candidates);
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  if (cand.empty()) throw InvariantError("no facility candidates");
  const int C = static_cast<int>(cand.size());
  std::vector<int> cleaf(C);
  for (int i = 0; i < C; ++i) {
    if (cand[i] >= bt.leaf_index.size() || bt.leaf_index[cand[i]] < 0)
      throw InvariantError("candidate is not a leaf of the tree");
    cleaf[i] = bt.leaf_index[cand[i]];
  }
  const int kk = std::min<int>(static_cast<int>(k), C);
  const int N = static_cast<int>(bt.nodes.size());

  std::vector<Dist> D(static_cast<std::size_t>(N) * C);
  for (int x = 0; x < N; ++x)
    for (int f = 0; f < C; ++f)
      D[static_cast<std::size_t>(x) * C + f] = binary_tree_distance(bt, x, cleaf[f]);

  auto inside = [&](int f, int x) {
    return bt.nodes[x].tin <= bt.nodes[cleaf[f]].tin &&
           bt.nodes[cleaf[f]].tin < bt.nodes[x].tout;
  };
  auto lex_before = [&](Dist d1, NodeId a, Dist d2, NodeId b) {
    return d1 < d2 || (d1 == d2 && a < b);
  };

  // dp[x][j][f]: cheapest service of the leaves under x with j facilities
  // open under x, given that f is the facility nearest to x in the whole
  // solution (nearest under the (distance, id) order).
  const std::size_t cells = static_cast<std::size_t>(N) * (kk + 1) * C;
  std::vector<Dist> dp(cells, kInf);
  struct Pick {
    int jl = -1, fl = -1, jr = -1, fr = -1;
  };
  std::vector<Pick> pick(cells);
  auto cell = [&](int x, int j, int f) {
    return (static_cast<std::size_t>(x) * (kk + 1) + j) * C + f;
  };

  for (int x = 0; x < N; ++x) {  // children precede parents by construction
    const auto& nd = bt.nodes[x];
    if (nd.left < 0) {
      for (int f = 0; f < C; ++f) {
        if (cand[f] == static_cast<NodeId>(nd.leaf_graph_node)) {
          dp[cell(x, 1, f)] = 0;
        } else {
          dp[cell(x, 0, f)] = D[static_cast<std::size_t>(x) * C + f];
        }
      }
      continue;
    }
    const int c1 = nd.left;
    const int c2 = nd.right;
    // The child may be served by the parent's designate f, or by its own
    // facility h: then h must win at the child and lose at x, or one of the
    // two designations would be wrong.
    auto best_child = [&](int c, int jc, int f) -> std::pair<Dist, int> {
      Dist best = dp[cell(c, jc, f)];
      int arg = f;
      for (int h = 0; h < C; ++h) {
        if (h == f || !inside(h, c)) continue;
        if (!lex_before(D[static_cast<std::size_t>(c) * C + h], cand[h],
                        D[static_cast<std::size_t>(c) * C + f], cand[f]))
          continue;
        if (!lex_before(D[static_cast<std::size_t>(x) * C + f], cand[f],
                        D[static_cast<std::size_t>(x) * C + h], cand[h]))
          continue;
        if (dp[cell(c, jc, h)] < best) {
          best = dp[cell(c, jc, h)];
          arg = h;
        }
      }
      return {best, arg};
    };
    for (int f = 0; f < C; ++f) {
      bool in1 = inside(f, c1);
      bool in2 = inside(f, c2);
      for (int j = 0; j <= kk; ++j) {
        Dist best = kInf;
        Pick bp;
        for (int j1 = 0; j1 <= j; ++j1) {
          int j2 = j - j1;
          Dist a, b;
          int fa, fb;
          if (in1) {
            a = dp[cell(c1, j1, f)];
            fa = f;
            std::tie(b, fb) = best_child(c2, j2, f);
          } else if (in2) {
            std::tie(a, fa) = best_child(c1, j1, f);
            b = dp[cell(c2, j2, f)];
            fb = f;
          } else {
            std::tie(a, fa) = best_child(c1, j1, f);
            std::tie(b, fb) = best_child(c2, j2, f);
          }
          if (a == kInf || b == kInf) continue;
          if (a + b < best) {
            best = a + b;
            bp = {j1, fa, j2, fb};
          }
        }
        dp[cell(x, j, f)] = best;
        pick[cell(x, j, f)] = bp;
      }
    }
  }

  Dist best = kInf;
  int bj = -1, bf = -1;
  for (int j = 1; j <= kk; ++j) {
    for (int f = 0; f < C; ++f) {
      if (dp[cell(bt.root, j, f)] < best) {
        best = dp[cell(bt.root, j, f)];
        bj = j;
        bf = f;
      }
    }
  }
  if (bj < 0) throw InvariantError("no feasible facility placement");

  TreeKMedian out;
  out.objective = best;
  std::vector<std::tuple<int, int, int>> stack{{bt.root, bj, bf}};
  while (!stack.empty()) {
    auto [x, j, f] = stack.back();
    stack.pop_back();
    const auto& nd = bt.nodes[x];
    if (nd.left < 0) {
      if (j == 1) out.facilities.push_back(cand[f]);
      continue;
    }
    const Pick& p = pick[cell(x, j, f)];
    stack.push_back({nd.left, p.jl, p.fl});
    stack.push_back({nd.right, p.jr, p.fr});
  }
  std::sort(out.facilities.begin(), out.facilities.end());
  return out;
}

KMedianResult kmedian(const WeightedGraph& g, NodeId k, const EmbedConfig& cfg) {
  NodeId n = g.node_count();
  if (k == 0 || k > n) throw InvariantError("k must be between 1 and the node count");
  if (!g.is_connected()) throw InvariantError("k-median requires a connected graph");

  double eps_hat = cfg.eps_hat > 0 ? cfg.eps_hat : default_eps_hat(n);
  int d = cfg.d > 0 ? cfg.d : default_hop_budget(n);
  auto choice = choose_hopset(g, cfg.hopset, d, eps_hat,
                              derive_seed(cfg.seed, "kmedian.hopset"), cfg.verify_cap);
  LevelAssignment levels = sample_levels(n, derive_seed(cfg.seed, "kmedian.levels"));
  SimulatedGraphH sim =
      make_simulated_graph(*choice.gprime, std::move(levels), choice.d, eps_hat);

  KMedianResult out;
  out.candidates =
      kmedian_candidates(sim, k, derive_seed(cfg.seed, "kmedian.sampler"), cfg.cap_const);

  EmbedConfig ec = cfg;
  ec.sources = out.candidates;
  ec.record_traces = false;
  auto pipe = compute_le_lists(g, ec);
  auto tree = build_frt_tree(pipe.lists, pipe.order, pipe.min_pair_distance,
                             pipe.max_pair_distance);
  auto bt = binarize_tree(tree);
  auto dp = kmedian_tree_dp(bt, out.candidates, k);
  out.facilities = dp.facilities;
  out.tree_objective = dp.objective;

  auto dist = dijkstra(g, out.facilities);
  for (NodeId v = 0; v < n; ++v) out.objective += dist[v];
  return out;
}

}  // namespace mbfkit
