#pragma once

// Randomized law checks shared by the unit tests and the acceptance run.
// Scalars and weights are drawn as whole numbers so that sums associate
// exactly in floating point; min/max-only laws would be exact either way.

#include <algorithm>
#include <random>

#include "mbfkit/modules.hpp"

namespace testsupport {

using mbfkit::Dist;
using mbfkit::kInf;
using mbfkit::NodeId;

struct LawStats {
  long long checks = 0;
  long long failures = 0;
};

struct MinPlusScalarOps {
  static Dist zero() { return kInf; }
  static Dist one() { return 0; }
  static Dist oplus(Dist a, Dist b) { return std::min(a, b); }
  static Dist odot(Dist a, Dist b) { return a + b; }
};

struct MaxMinScalarOps {
  static Dist zero() { return 0; }
  static Dist one() { return kInf; }
  static Dist oplus(Dist a, Dist b) { return std::max(a, b); }
  static Dist odot(Dist a, Dist b) { return std::min(a, b); }
};

struct BoolScalarOps {
  static bool zero() { return false; }
  static bool one() { return true; }
  static bool oplus(bool a, bool b) { return a || b; }
  static bool odot(bool a, bool b) { return a && b; }
};

struct PathSetScalarOps {
  static mbfkit::PathSet zero() { return mbfkit::PathSet::bottom(); }
  static mbfkit::PathSet one() { return mbfkit::PathSet::one(6); }
  static mbfkit::PathSet oplus(const mbfkit::PathSet& a, const mbfkit::PathSet& b) {
    return mbfkit::oplus(a, b);
  }
  static mbfkit::PathSet odot(const mbfkit::PathSet& a, const mbfkit::PathSet& b) {
    return mbfkit::odot(a, b);
  }
};

inline Dist draw_minplus_scalar(std::mt19937_64& rng) {
  if (std::uniform_int_distribution<int>(0, 4)(rng) == 0) return kInf;
  return std::uniform_int_distribution<int>(0, 100)(rng);
}

inline Dist draw_maxmin_scalar(std::mt19937_64& rng) {
  int roll = std::uniform_int_distribution<int>(0, 9)(rng);
  if (roll == 0) return 0;
  if (roll == 1) return kInf;
  return std::uniform_int_distribution<int>(1, 100)(rng);
}

inline bool draw_bool_scalar(std::mt19937_64& rng) {
  return std::uniform_int_distribution<int>(0, 1)(rng) != 0;
}

inline mbfkit::DistanceMap draw_distance_map(std::mt19937_64& rng) {
  mbfkit::DistanceMap x;
  int count = std::uniform_int_distribution<int>(0, 4)(rng);
  for (int i = 0; i < count; ++i) {
    NodeId node = std::uniform_int_distribution<NodeId>(0, 15)(rng);
    Dist value = std::uniform_int_distribution<int>(0, 100)(rng);
    x = mbfkit::oplus(x, mbfkit::DistanceMap::singleton(node, value));
  }
  return x;
}

inline mbfkit::WidestMap draw_widest_map(std::mt19937_64& rng) {
  mbfkit::WidestMap x;
  int count = std::uniform_int_distribution<int>(0, 4)(rng);
  for (int i = 0; i < count; ++i) {
    NodeId node = std::uniform_int_distribution<NodeId>(0, 15)(rng);
    Dist value = std::uniform_int_distribution<int>(0, 10)(rng) == 0
                     ? kInf
                     : std::uniform_int_distribution<int>(1, 100)(rng);
    x = mbfkit::oplus(x, mbfkit::WidestMap::singleton(node, value));
  }
  return x;
}

inline mbfkit::PathSet draw_path_set(std::mt19937_64& rng) {
  mbfkit::PathSet x;
  int count = std::uniform_int_distribution<int>(0, 3)(rng);
  for (int i = 0; i < count; ++i) {
    NodeId pool[6] = {0, 1, 2, 3, 4, 5};
    std::shuffle(std::begin(pool), std::end(pool), rng);
    int len = std::uniform_int_distribution<int>(1, 3)(rng);
    std::vector<NodeId> tuple(pool, pool + len);
    Dist w = std::uniform_int_distribution<int>(0, 50)(rng);
    x = mbfkit::oplus(x, mbfkit::PathSet::single(std::move(tuple), w));
  }
  return x;
}

inline mbfkit::NodeSet draw_node_set(std::mt19937_64& rng) {
  mbfkit::NodeSet x;
  int count = std::uniform_int_distribution<int>(0, 4)(rng);
  for (int i = 0; i < count; ++i) {
    NodeId node = std::uniform_int_distribution<NodeId>(0, 7)(rng);
    x = mbfkit::oplus(x, mbfkit::NodeSet::singleton(node));
  }
  return x;
}

/// Checks the semiring laws on scalars and the semimodule laws on elements,
/// all with exact equality. Returns totals so callers can report volume.
template <class SemOps, class M, class DrawS, class DrawX>
LawStats run_algebra_laws(std::mt19937_64& rng, int iterations, DrawS draw_s,
                          DrawX draw_x) {
  LawStats st;
  auto chk = [&st](bool ok) {
    ++st.checks;
    if (!ok) ++st.failures;
  };
  for (int i = 0; i < iterations; ++i) {
    auto a = draw_s(rng);
    auto b = draw_s(rng);
    auto c = draw_s(rng);
    chk(SemOps::oplus(a, b) == SemOps::oplus(b, a));
    chk(SemOps::oplus(SemOps::oplus(a, b), c) == SemOps::oplus(a, SemOps::oplus(b, c)));
    chk(SemOps::oplus(a, SemOps::zero()) == a);
    chk(SemOps::odot(SemOps::odot(a, b), c) == SemOps::odot(a, SemOps::odot(b, c)));
    chk(SemOps::odot(SemOps::one(), a) == a);
    chk(SemOps::odot(a, SemOps::one()) == a);
    chk(SemOps::odot(a, SemOps::oplus(b, c)) ==
        SemOps::oplus(SemOps::odot(a, b), SemOps::odot(a, c)));
    chk(SemOps::odot(SemOps::oplus(a, b), c) ==
        SemOps::oplus(SemOps::odot(a, c), SemOps::odot(b, c)));
    chk(SemOps::odot(SemOps::zero(), a) == SemOps::zero());
    chk(SemOps::odot(a, SemOps::zero()) == SemOps::zero());

    auto x = draw_x(rng);
    auto y = draw_x(rng);
    auto z = draw_x(rng);
    chk(M::oplus(x, y) == M::oplus(y, x));
    chk(M::oplus(M::oplus(x, y), z) == M::oplus(x, M::oplus(y, z)));
    chk(M::oplus(x, M::bottom()) == x);
    chk(M::scale(SemOps::one(), x) == x);
    chk(M::scale(SemOps::zero(), x) == M::bottom());
    chk(M::scale(a, M::bottom()) == M::bottom());
    chk(M::scale(SemOps::oplus(a, b), x) == M::oplus(M::scale(a, x), M::scale(b, x)));
    chk(M::scale(a, M::oplus(x, y)) == M::oplus(M::scale(a, x), M::scale(a, y)));
    chk(M::scale(SemOps::odot(a, b), x) == M::scale(a, M::scale(b, x)));
  }
  return st;
}

inline LawStats check_min_plus_laws(std::uint64_t seed, int iterations) {
  std::mt19937_64 rng(seed);
  return run_algebra_laws<MinPlusScalarOps, mbfkit::MinPlusModule>(
      rng, iterations, draw_minplus_scalar, draw_distance_map);
}

inline LawStats check_max_min_laws(std::uint64_t seed, int iterations) {
  std::mt19937_64 rng(seed);
  return run_algebra_laws<MaxMinScalarOps, mbfkit::MaxMinModule>(
      rng, iterations, draw_maxmin_scalar, draw_widest_map);
}

inline LawStats check_all_paths_laws(std::uint64_t seed, int iterations) {
  std::mt19937_64 rng(seed);
  return run_algebra_laws<PathSetScalarOps, mbfkit::AllPathsModule>(
      rng, iterations, draw_path_set, draw_path_set);
}

inline LawStats check_boolean_laws(std::uint64_t seed, int iterations) {
  std::mt19937_64 rng(seed);
  return run_algebra_laws<BoolScalarOps, mbfkit::BoolModule>(rng, iterations,
                                                             draw_bool_scalar,
                                                             draw_node_set);
}

}  // namespace testsupport
