#pragma once

#include <functional>
#include <sstream>
#include <vector>

#include "mbfkit/common.hpp"
#include "mbfkit/graph.hpp"
#include "mbfkit/modules.hpp"
#include "mbfkit/parallel.hpp"

namespace mbfkit {

/// The graph read as a matrix: diagonal entries are the multiplicative
/// neutral (so a node always keeps its own value), edges contribute their
/// weight times `stretch`, absences contribute nothing.
struct AdjacencyOperator {
  const WeightedGraph* graph = nullptr;
  double stretch = 1.0;
};

template <class M>
using StateVector = std::vector<typename M::Elem>;

template <class M>
using FilterFn = std::function<typename M::Elem(const typename M::Elem&)>;

/// A run description: representative projection r (identity when empty),
/// start vector, hop cap, and an optional per-element size guard. When
/// filter_at_end is set the run keeps intermediate states unprojected and
/// applies r once to the final vector; required when truncating a tied
/// element mid-run could drop a value whose extensions remain valid.
template <class M>
struct MbfAlgorithm {
  FilterFn<M> filter;
  StateVector<M> initial;
  int hop_cap = 0;
  std::size_t elem_cap = 0;
  bool filter_at_end = false;
};

namespace detail {
inline void throw_elem_cap(std::size_t size, std::size_t cap) {
  std::ostringstream msg;
  msg << "element grew to " << size << " entries, exceeding the cap of " << cap;
  throw InvariantError(msg.str());
}
}  // namespace detail

/// One matrix-vector multiplication y = A x. Per node: own value joined with
/// edge-scaled neighbor values, in adjacency order. Writes are per slot, so
/// the result is identical for every thread count.
template <class M>
StateVector<M> slf_apply(const AdjacencyOperator& a, const StateVector<M>& x,
                         std::size_t elem_cap = 0) {
  const WeightedGraph& g = *a.graph;
  if (x.size() != g.node_count())
    throw InvariantError("state vector size does not match the graph");
  if (!M::kSupportsStretch && a.stretch != 1.0)
    throw InvariantError("this module does not admit stretched edge weights");
  StateVector<M> y(x.size());
  parallel_for(x.size(), [&](std::size_t v) {
    auto acc = x[v];
    for (const Edge& e : g.neighbors(static_cast<NodeId>(v))) {
      acc = M::oplus(acc, M::scale(M::edge_scalar(a.stretch, static_cast<NodeId>(v),
                                                  e.to, e.weight),
                                   x[e.to]));
      if (elem_cap != 0 && M::size(acc) > elem_cap)
        detail::throw_elem_cap(M::size(acc), elem_cap);
    }
    y[v] = std::move(acc);
  });
  return y;
}

/// Applies the projection coordinate-wise (no-op for the identity filter).
template <class M>
StateVector<M> apply_filter(const MbfAlgorithm<M>& alg, StateVector<M> x) {
  if (!alg.filter) return x;
  parallel_for(x.size(), [&](std::size_t v) { x[v] = alg.filter(x[v]); });
  return x;
}

/// One filtered step r(A x).
template <class M>
StateVector<M> mbf_step(const MbfAlgorithm<M>& alg, const AdjacencyOperator& a,
                        const StateVector<M>& x) {
  return apply_filter(alg, slf_apply<M>(a, x, alg.elem_cap));
}

/// Exactly `steps` multiplications from the given vector, optionally
/// filtering after each one, with no early exit. The final vector is
/// filtered only when filter_each_step is set.
template <class M>
StateVector<M> run_steps(const MbfAlgorithm<M>& alg, const AdjacencyOperator& a,
                         StateVector<M> x, int steps, bool filter_each_step) {
  for (int i = 0; i < steps; ++i) {
    x = slf_apply<M>(a, x, alg.elem_cap);
    if (filter_each_step) x = apply_filter(alg, x);
  }
  return x;
}

template <class M>
struct MbfResult {
  StateVector<M> state;
  int iterations = 0;
  bool fixpoint = false;
};

/// Filters the start vector, then applies filtered steps until the state
/// repeats or hop_cap steps ran. iterations counts steps applied, including
/// the one that confirmed the fixpoint. With filter_at_end the loop runs on
/// raw states and only the returned vector is projected.
template <class M>
MbfResult<M> mbf_run(const MbfAlgorithm<M>& alg, const AdjacencyOperator& a) {
  MbfResult<M> res;
  if (alg.filter_at_end) {
    res.state = alg.initial;
    for (int i = 1; i <= alg.hop_cap; ++i) {
      auto next = slf_apply<M>(a, res.state, alg.elem_cap);
      res.iterations = i;
      if (next == res.state) {
        res.fixpoint = true;
        break;
      }
      res.state = std::move(next);
    }
    res.state = apply_filter(alg, std::move(res.state));
    return res;
  }
  res.state = apply_filter(alg, alg.initial);
  for (int i = 1; i <= alg.hop_cap; ++i) {
    auto next = mbf_step(alg, a, res.state);
    res.iterations = i;
    if (next == res.state) {
      res.fixpoint = true;
      return res;
    }
    res.state = std::move(next);
  }
  return res;
}

}  // namespace mbfkit
