#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "test_oracles.hpp"
#include "visper/geometry.hpp"
#include "visper/random.hpp"

namespace visper {
namespace {

TEST(ConvexHull, SinglePoint) {
  const std::vector<Point> pts{{0, 0}};
  const HullState h = convex_hull(pts);
  EXPECT_EQ(h.kind(), HullKind::Point);
  EXPECT_DOUBLE_EQ(h.perimeter(), 0.0);
}

TEST(ConvexHull, SegmentPerimeterCountsTwice) {
  const std::vector<Point> pts{{0, 0}, {2, 0}};
  const HullState h = convex_hull(pts);
  EXPECT_EQ(h.kind(), HullKind::Segment);
  EXPECT_DOUBLE_EQ(h.perimeter(), 4.0);
}

TEST(ConvexHull, CollinearInputYieldsSegment) {
  const std::vector<Point> pts{{0, 0}, {3, 3}, {1, 1}, {2, 2}};
  const HullState h = convex_hull(pts);
  ASSERT_EQ(h.kind(), HullKind::Segment);
  EXPECT_NEAR(h.perimeter(), 2.0 * 3.0 * std::sqrt(2.0), 1e-12);
}

TEST(ConvexHull, UnitSquare) {
  const std::vector<Point> pts{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}, {0.5, 0}};
  const HullState h = convex_hull(pts);
  ASSERT_EQ(h.kind(), HullKind::Polygon);
  EXPECT_EQ(h.vertices().size(), 4u);
  EXPECT_DOUBLE_EQ(h.perimeter(), 4.0);
  double turning = 0.0;
  for (std::size_t k = 0; k < 4; ++k) turning += h.external_angle(k);
  EXPECT_NEAR(turning, kTwoPi, 1e-12);
}

TEST(ConvexHull, EmptyInputThrows) {
  EXPECT_THROW(convex_hull(std::span<const Point>{}), std::invalid_argument);
}

TEST(HullInsert, SegmentExtensionIsPi) {
  HullState h;
  h.insert({0, 0});
  h.insert({1, 0});
  const auto step = h.insert({2, 0});
  EXPECT_EQ(step.location, Location::Exterior);
  EXPECT_DOUBLE_EQ(step.tau, kPi);
  EXPECT_EQ(h.kind(), HullKind::Segment);
  EXPECT_DOUBLE_EQ(h.perimeter(), 4.0);
}

TEST(HullInsert, InteriorPointIsContained) {
  HullState h;
  for (Point p : {Point{0, 0}, Point{1, 0}, Point{1, 1}}) h.insert(p);
  const double before = h.perimeter();
  const auto step = h.insert({0.5, 0.25});
  EXPECT_EQ(step.location, Location::Contained);
  EXPECT_EQ(step.tau, 0.0);
  EXPECT_EQ(h.vertices().size(), 3u);
  EXPECT_EQ(h.perimeter(), before);
}

TEST(HullInsert, BoundaryPointIsContained) {
  HullState h;
  for (Point p : {Point{0, 0}, Point{2, 0}, Point{0, 2}}) h.insert(p);
  EXPECT_EQ(h.insert({1, 0}).location, Location::Contained);
  EXPECT_EQ(h.insert({1, 1}).location, Location::Contained);
}

TEST(HullInsert, OffSegmentPointMakesTriangle) {
  // Hand geometry: the new triangle's interior angle at (1,1) is pi/4.
  HullState h;
  h.insert({0, 0});
  h.insert({1, 0});
  const auto step = h.insert({1, 1});
  EXPECT_EQ(step.location, Location::Exterior);
  EXPECT_NEAR(step.tau, 3.0 * kPi / 4.0, 1e-12);
  EXPECT_EQ(h.kind(), HullKind::Polygon);
}

TEST(HullInsert, FirstAndSecondPoints) {
  HullState h;
  EXPECT_DOUBLE_EQ(h.insert({3, 4}).tau, kTwoPi);
  EXPECT_EQ(h.insert({3, 4}).location, Location::Contained);
  EXPECT_DOUBLE_EQ(h.insert({5, 4}).tau, kPi);
}

TEST(HullInsert, CollinearNeighbourIsDropped) {
  HullState h;
  for (Point p : {Point{0, 0}, Point{1, 0}, Point{1, 1}, Point{0, 1}}) h.insert(p);
  const auto step = h.insert({2, 0});
  EXPECT_EQ(step.location, Location::Exterior);
  EXPECT_EQ(h.vertices().size(), 4u);  // (1,0) is no longer a vertex
  // Interior angle at (2,0) between directions to (0,0) and (1,1) is pi/4.
  EXPECT_NEAR(step.tau, 3.0 * kPi / 4.0, 1e-12);
}

// Inserting one point at a time yields the hull of all points; every tau after
// the first lies in [0, pi].
TEST(HullInsert, IncrementalMatchesBatchOnRandomInputs) {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.next() % 40;
    std::vector<Point> pts;
    for (std::size_t i = 0; i < n; ++i) {
      // Mix of continuous and lattice points so collinear cases occur.
      if (rng.uniform() < 0.5) {
        pts.push_back({rng.uniform(-5, 5), rng.uniform(-5, 5)});
      } else {
        pts.push_back({double(rng.next() % 5), double(rng.next() % 5)});
      }
    }
    HullState inc;
    for (std::size_t i = 0; i < n; ++i) {
      const auto step = inc.insert(pts[i]);
      if (i > 0) {
        EXPECT_GE(step.tau, 0.0);
        EXPECT_LE(step.tau, kPi + 1e-12);
      }
    }
    const HullState batch = convex_hull(pts);
    ASSERT_EQ(inc.vertices().size(), batch.vertices().size()) << "trial " << trial;
    EXPECT_NEAR(inc.perimeter(), batch.perimeter(), 1e-9);
    for (Point v : batch.vertices()) {
      const bool found = std::any_of(inc.vertices().begin(), inc.vertices().end(),
                                     [&](Point w) { return distance(v, w) < 1e-12; });
      EXPECT_TRUE(found);
    }
  }
}

TEST(CoverageInterval, DisjointDisksCoverNothing) {
  EXPECT_TRUE(coverage_interval({0, 0}, {3, 0}).empty());
  EXPECT_TRUE(coverage_interval({0, 0}, {2, 0}).empty());  // tangency
}

TEST(CoverageInterval, CoincidentDisksCoverEverything) {
  EXPECT_DOUBLE_EQ(coverage_interval({1, 1}, {1, 1}).measure(), kTwoPi);
}

TEST(CoverageInterval, UnitDistanceCoversTwoThirdsPi) {
  const ArcIntervalSet c = coverage_interval({0, 0}, {1, 0});
  EXPECT_NEAR(c.measure(), kTwoPi / 3.0, 1e-12);
  EXPECT_TRUE(c.contains(0.0));
  EXPECT_TRUE(c.contains(kPi / 3.0 - 1e-9));
  EXPECT_FALSE(c.contains(kPi / 3.0 + 1e-9));
  // Independent check: sample the circle directly against the other disk.
  std::size_t inside = 0;
  const std::size_t m = 1 << 18;
  for (std::size_t k = 0; k < m; ++k) {
    const double a = kTwoPi * (double(k) + 0.5) / double(m);
    const Point q{std::cos(a) - 1.0, std::sin(a)};
    if (dot(q, q) <= 1.0) ++inside;
  }
  EXPECT_NEAR(c.measure(), kTwoPi * double(inside) / double(m), 1e-4);
}

TEST(CoverageInterval, MeasureDecreasesWithDistance) {
  double prev = kTwoPi;
  for (double d = 0.01; d < 2.0; d += 0.01) {
    const double m = coverage_interval({0, 0}, {d * 0.6, d * 0.8}).measure();
    EXPECT_NEAR(m, 2.0 * std::acos(d / 2.0), 1e-12);
    EXPECT_LT(m, prev);
    prev = m;
  }
  EXPECT_LT(coverage_interval({0, 0}, {1.999999, 0}).measure(), 1e-2);
}

TEST(ArcIntervalSet, SubtractFromFull) {
  const auto half = ArcIntervalSet::from_intervals({{0.0, kPi}});
  const auto rest = interval_subtract(ArcIntervalSet::full(), half);
  ASSERT_EQ(rest.intervals().size(), 1u);
  EXPECT_DOUBLE_EQ(rest.intervals()[0].first, kPi);
  EXPECT_DOUBLE_EQ(rest.intervals()[0].second, kTwoPi);
  EXPECT_DOUBLE_EQ(rest.measure(), kPi);
}

TEST(ArcIntervalSet, WraparoundUnion) {
  const auto a = ArcIntervalSet::from_intervals({{3 * kPi / 2, kTwoPi}});
  const auto b = ArcIntervalSet::from_intervals({{0.0, kPi / 2}});
  const auto u = interval_union(a, b);
  EXPECT_EQ(u.intervals().size(), 2u);
  EXPECT_DOUBLE_EQ(u.measure(), kPi);
  EXPECT_EQ(u, ArcIntervalSet::arc(0.0, kPi / 4 * 2));
}

TEST(ArcIntervalSet, EmptyMeasure) { EXPECT_EQ(measure(ArcIntervalSet{}), 0.0); }

TEST(ArcIntervalSet, AlgebraProperties) {
  Rng rng(11);
  auto random_set = [&] {
    std::vector<ArcIntervalSet::Interval> ivs;
    const std::size_t k = rng.next() % 5;
    for (std::size_t i = 0; i < k; ++i) {
      const double a = rng.uniform(0, kTwoPi);
      ivs.emplace_back(a, std::min(kTwoPi, a + rng.uniform(0, 2)));
    }
    return ArcIntervalSet::from_intervals(ivs);
  };
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_set();
    const auto b = random_set();
    EXPECT_NEAR(interval_subtract(a, b).measure() + interval_intersect(a, b).measure(), a.measure(), 1e-12);
    EXPECT_EQ(interval_union(a, a), a);
    EXPECT_EQ(interval_union(a, b), interval_union(b, a));
    EXPECT_EQ(ArcIntervalSet::from_intervals({a.intervals().begin(), a.intervals().end()}), a);
    EXPECT_NEAR(interval_union(a, b).measure(), testing::sampled_measure(interval_union(a, b), 1 << 16), 1e-3);
  }
}

TEST(Spread, GridAndPair) {
  std::vector<Point> g;
  for (int y = 0; y < 3; ++y)
    for (int x = 0; x < 3; ++x) g.push_back({double(x), double(y)});
  const PointSet grid3(g);
  EXPECT_NEAR(spread(grid3), 2.0 * std::sqrt(2.0), 1e-12);
  EXPECT_TRUE(is_dense(grid3, std::sqrt(2.0)));
  EXPECT_FALSE(is_dense(grid3, 0.9));
  EXPECT_DOUBLE_EQ(spread(PointSet({{0, 0}, {0, 5}})), 1.0);
  EXPECT_THROW(spread(PointSet({{0, 0}})), std::invalid_argument);
}

TEST(PointSet, RejectsDuplicatesAndNonFinite) {
  EXPECT_THROW(PointSet({{0, 0}, {0, 0}}), std::invalid_argument);
  EXPECT_THROW(PointSet({{NAN, 0}}), std::invalid_argument);
}

TEST(StackingOrder, Bijection) {
  const auto f = StackingOrder::from_sequence({2, 0, 1});
  EXPECT_EQ(f.rank(2), 1u);
  EXPECT_EQ(f.rank(0), 2u);
  EXPECT_EQ(f.at_rank(3), 1u);
  EXPECT_EQ(StackingOrder::from_ranks({2, 3, 1}), f);
  EXPECT_THROW(StackingOrder::from_sequence({0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(StackingOrder::from_ranks({1, 1}), std::invalid_argument);
}

}  // namespace
}  // namespace visper
