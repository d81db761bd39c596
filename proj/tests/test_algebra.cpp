#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "algebra_laws.hpp"
#include "mbfkit/modules.hpp"

using namespace mbfkit;
namespace ts = testsupport;

TEST_CASE("min-plus scalar operations") {
  CHECK(std::min<Dist>(3, 5) == 3);
  CHECK(std::min<Dist>(7, kInf) == 7);
  CHECK(std::min<Dist>(0, 0) == 0);
  CHECK(Dist(2) + Dist(3) == 5);
  CHECK(Dist(7) + Dist(0) == 7);
  CHECK(Dist(7) + kInf == kInf);
}

TEST_CASE("distance map join takes the entry-wise minimum") {
  DistanceMap x = oplus(DistanceMap::singleton(1, 2), DistanceMap::bottom());
  DistanceMap y = oplus(DistanceMap::singleton(1, 5), DistanceMap::singleton(2, 1));
  DistanceMap joined = oplus(x, y);
  REQUIRE(joined.size() == 2);
  CHECK(joined.at(1) == 2);
  CHECK(joined.at(2) == 1);

  CHECK(oplus(y, DistanceMap::bottom()) == y);
  CHECK(oplus(y, y) == y);
}

TEST_CASE("distance map scaling adds the scalar to every entry") {
  DistanceMap x = oplus(DistanceMap::singleton(1, 3), DistanceMap::singleton(4, 0));
  DistanceMap scaled = scale(2, x);
  REQUIRE(scaled.size() == 2);
  CHECK(scaled.at(1) == 5);
  CHECK(scaled.at(4) == 2);

  CHECK(scale(0, x) == x);
  CHECK(scale(kInf, x) == DistanceMap::bottom());
  CHECK(scale(2, DistanceMap::bottom()) == DistanceMap::bottom());
}

TEST_CASE("distance map aggregation equals folding the join") {
  std::vector<DistanceMap> parts = {
      DistanceMap::singleton(1, 2),
      oplus(DistanceMap::singleton(1, 1), DistanceMap::singleton(3, 7)),
      DistanceMap::bottom()};
  DistanceMap agg = aggregate(parts);
  REQUIRE(agg.size() == 2);
  CHECK(agg.at(1) == 1);
  CHECK(agg.at(3) == 7);

  CHECK(aggregate({parts[1]}) == parts[1]);
  CHECK(aggregate({}) == DistanceMap::bottom());
}

TEST_CASE("max-min scalar operations") {
  CHECK(std::max<Dist>(3, 5) == 5);
  CHECK(std::min<Dist>(3, 5) == 3);
  CHECK(std::min<Dist>(7, 0) == 0);
}

TEST_CASE("widest map join and capping") {
  WidestMap x = oplus(WidestMap::singleton(1, 4), WidestMap::singleton(2, 9));
  WidestMap y = WidestMap::singleton(1, 6);
  WidestMap joined = oplus(x, y);
  CHECK(joined.at(1) == 6);
  CHECK(joined.at(2) == 9);

  WidestMap capped = scale(5, joined);
  CHECK(capped.at(1) == 5);
  CHECK(capped.at(2) == 5);
  CHECK(scale(kInf, joined) == joined);
  CHECK(scale(0, joined) == WidestMap::bottom());
}

TEST_CASE("path set join keeps the lighter copy of a tuple") {
  PathSet x = PathSet::single({0, 1}, 2);
  PathSet y = oplus(PathSet::single({0, 1}, 1), PathSet::single({0, 2}, 4));
  PathSet joined = oplus(x, y);
  REQUIRE(joined.size() == 2);
  CHECK(joined.paths.at({0, 1}) == 1);
  CHECK(joined.paths.at({0, 2}) == 4);

  CHECK(oplus(x, PathSet::bottom()) == x);
  CHECK(oplus(x, x) == x);
}

TEST_CASE("path set concatenation glues at the shared node") {
  PathSet ab = PathSet::single({0, 1}, 2);
  PathSet bc = PathSet::single({1, 2}, 3);
  PathSet glued = odot(ab, bc);
  REQUIRE(glued.size() == 1);
  CHECK(glued.paths.at({0, 1, 2}) == 5);

  CHECK(odot(PathSet::one(4), ab) == ab);
  CHECK(odot(ab, PathSet::one(4)) == ab);
  CHECK(odot(ab, PathSet::single({2, 3}, 3)) == PathSet::bottom());

  // A concatenation that would revisit a node is dropped.
  CHECK(odot(PathSet::single({0, 1}, 1), PathSet::single({1, 0}, 1)) ==
        PathSet::bottom());
}

TEST_CASE("node set join and boolean scaling") {
  NodeSet x = oplus(NodeSet::singleton(2), NodeSet::singleton(0));
  CHECK(x.nodes == std::vector<NodeId>{0, 2});
  CHECK(x.contains(2));
  CHECK_FALSE(x.contains(1));
  CHECK(scale(true, x) == x);
  CHECK(scale(false, x) == NodeSet::bottom());
}

TEST_CASE("randomized law checks hold exactly for every carrier") {
  auto expect_clean = [](ts::LawStats st) {
    CHECK(st.failures == 0);
    CHECK(st.checks >= 500);
  };
  expect_clean(ts::check_min_plus_laws(101, 500));
  expect_clean(ts::check_max_min_laws(102, 500));
  expect_clean(ts::check_all_paths_laws(103, 500));
  expect_clean(ts::check_boolean_laws(104, 500));
}
