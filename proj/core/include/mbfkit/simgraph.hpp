#pragma once

#include <cmath>
#include <cstdint>
#include <sstream>
#include <vector>

#include "mbfkit/engine.hpp"
#include "mbfkit/hopset.hpp"

namespace mbfkit {

/// One independent geometric level per node, P[level = k] = 2^-(k+1).
struct LevelAssignment {
  std::vector<int> level;
  int lambda_max = 0;  // the top occupied level

  int pair_level(NodeId v, NodeId w) const {
    return level[v] < level[w] ? level[v] : level[w];
  }
};

LevelAssignment sample_levels(NodeId n, std::uint64_t seed);

/// Weight of the simulated edge {v, w}: dist_d scaled by (1+eps)^(top - pair
/// level). Infinite dist_d means the pair is not connected within d hops and
/// the edge is absent.
double h_edge_weight(int pair_level, int lambda_max, double eps_hat, Dist dist_d);

/// The simulated graph H, kept implicit: a complete graph over the nodes of
/// the augmented graph whose edge weights are level-scaled d-hop distances.
/// sigma caches the per-level scale factors.
struct SimulatedGraphH {
  const AugmentedGraph* gprime = nullptr;
  LevelAssignment levels;
  int d = 1;
  double eps_hat = 0;
  std::vector<double> sigma;

  NodeId node_count() const { return gprime->combined().node_count(); }
};

SimulatedGraphH make_simulated_graph(const AugmentedGraph& gprime, LevelAssignment levels,
                                     int d, double eps_hat);

/// eps_hat used when none is configured: 1 / ceil(log2 n)^2.
double default_eps_hat(NodeId n);

/// H as an explicit weighted graph. All-pairs d-hop probes; guarded to `cap`
/// nodes. Unreachable-in-d pairs get no edge.
WeightedGraph materialize_h(const SimulatedGraphH& sim, NodeId cap = 256);

/// Recorded engine states of an oracle run over the min-plus carrier, enough
/// to replay every hop of every level block backwards. hops[0] of each block
/// is the level-masked input; subsequent entries are the filtered states
/// after each multiplication until the block settled.
struct MinPlusTrace {
  using State = StateVector<MinPlusModule>;
  struct LevelBlock {
    std::vector<State> hops;
  };
  struct Iteration {
    std::vector<LevelBlock> levels;
  };
  std::vector<State> states;          // states[i] = x(i), filtered
  std::vector<Iteration> iterations;  // iterations[i] produced states[i+1]
};

namespace detail {

template <class M>
void level_mask(const LevelAssignment& lv, int lambda, StateVector<M>& x) {
  for (std::size_t v = 0; v < x.size(); ++v)
    if (lv.level[v] < lambda) x[v] = M::bottom();
}

}  // namespace detail

/// One simulated multiplication x -> r(A_H x) evaluated level by level: mask
/// to the level, run at most d filtered multiplications at that level's
/// scale, mask again, and join the level results. A level block that reaches
/// a fixpoint early stops; the remaining multiplications could not change
/// it. filter_inner exists for equivalence tests and drops the inner
/// projections, relying on the final one.
template <class M>
StateVector<M> oracle_iterate(const SimulatedGraphH& sim, const MbfAlgorithm<M>& alg,
                              const StateVector<M>& x,
                              MinPlusTrace::Iteration* trace = nullptr,
                              bool filter_inner = true) {
  constexpr bool kTraceable = std::is_same_v<M, MinPlusModule>;
  if (trace && !kTraceable)
    throw InvariantError("traces are only recorded for the min-plus carrier");
  const NodeId n = sim.node_count();
  if (x.size() != n) throw InvariantError("state vector size does not match the graph");

  StateVector<M> acc(n, M::bottom());
  AdjacencyOperator a{&sim.gprime->combined(), 1.0};
  for (int lambda = 0; lambda <= sim.levels.lambda_max; ++lambda) {
    a.stretch = sim.sigma[lambda];
    StateVector<M> y = x;
    detail::level_mask<M>(sim.levels, lambda, y);
    MinPlusTrace::LevelBlock block;
    if constexpr (kTraceable) {
      if (trace) block.hops.push_back(y);
    }
    for (int f = 0; f < sim.d; ++f) {
      StateVector<M> next = slf_apply<M>(a, y, alg.elem_cap);
      if (filter_inner) next = apply_filter(alg, next);
      if (next == y) break;
      y = std::move(next);
      if constexpr (kTraceable) {
        if (trace) block.hops.push_back(y);
      }
    }
    for (NodeId v = 0; v < n; ++v) {
      if (sim.levels.level[v] >= lambda) acc[v] = M::oplus(acc[v], y[v]);
    }
    if constexpr (kTraceable) {
      if (trace) trace->levels.push_back(std::move(block));
    }
  }
  return apply_filter(alg, std::move(acc));
}

/// Runs oracle_iterate to the fixpoint, capped at cap_const * ceil(log2 n)^2
/// outer iterations. On cap exhaustion throws ConvergenceError carrying the
/// last state. iterations includes the confirming repeat.
template <class M>
MbfResult<M> oracle_run(const SimulatedGraphH& sim, const MbfAlgorithm<M>& alg,
                        int cap_const = 8, MinPlusTrace* trace = nullptr) {
  const NodeId n = sim.node_count();
  int lg = ceil_log2(n < 2 ? 2 : n);
  int cap = cap_const * lg * lg;
  MbfResult<M> res;
  res.state = apply_filter(alg, alg.initial);
  if constexpr (std::is_same_v<M, MinPlusModule>) {
    if (trace) {
      trace->states.clear();
      trace->iterations.clear();
      trace->states.push_back(res.state);
    }
  } else {
    if (trace) throw InvariantError("traces are only recorded for the min-plus carrier");
  }
  for (int it = 1; it <= cap; ++it) {
    MinPlusTrace::Iteration iter_trace;
    MinPlusTrace::Iteration* tr = nullptr;
    if constexpr (std::is_same_v<M, MinPlusModule>) {
      if (trace) tr = &iter_trace;
    }
    auto next = oracle_iterate<M>(sim, alg, res.state, tr);
    res.iterations = it;
    if constexpr (std::is_same_v<M, MinPlusModule>) {
      if (trace) {
        trace->iterations.push_back(std::move(iter_trace));
        trace->states.push_back(next);
      }
    }
    if (next == res.state) {
      res.fixpoint = true;
      return res;
    }
    res.state = std::move(next);
  }
  std::ostringstream msg;
  msg << "no fixpoint within " << cap << " simulated iterations";
  throw ConvergenceError<StateVector<M>>(msg.str(), cap, std::move(res.state));
}

}  // namespace mbfkit
