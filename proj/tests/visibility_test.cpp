#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "test_oracles.hpp"
#include "visper/generators.hpp"
#include "visper/orders.hpp"
#include "visper/random.hpp"
#include "visper/visibility.hpp"

namespace visper {
namespace {

const PointSet kTriple({{0, 0}, {1, 0}, {2, 0}});
const PointSet kSquare({{0, 0}, {1, 0}, {1, 1}, {0, 1}});

PointSet random_cloud(Rng& rng, std::size_t n, double side) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back({rng.uniform(0, side), rng.uniform(0, side)});
  return PointSet(std::move(pts));
}

TEST(VisibleArcs, FrontDiskIsFullyVisible) {
  const auto f = StackingOrder::identity(3);
  EXPECT_DOUBLE_EQ(visible_arcs(kTriple, f, 0).measure(), kTwoPi);
}

TEST(VisibleArcs, SecondDiskAtUnitDistance) {
  const PointSet ps({{0, 0}, {1, 0}});
  const auto arcs = visible_arcs(ps, StackingOrder::identity(2), 1);
  EXPECT_NEAR(arcs.measure(), 4.0 * kPi / 3.0, 1e-12);
  EXPECT_FALSE(arcs.contains(kPi));  // facing the front disk
  EXPECT_TRUE(arcs.contains(0.0));
}

TEST(VisibleArcs, BadIndexThrows) {
  EXPECT_THROW(visible_arcs(kTriple, StackingOrder::identity(3), 3), std::out_of_range);
}

TEST(VisiblePerimeter, CollinearTriple) {
  const auto r = visible_perimeter(kTriple, StackingOrder::identity(3));
  EXPECT_NEAR(r.total, 14.0 * kPi / 3.0, 1e-12);
  EXPECT_NEAR(r.total, testing::quadrature_visible_perimeter(kTriple, StackingOrder::identity(3)), 1e-4);
}

TEST(VisiblePerimeter, DisjointDisksAreAdditive) {
  const PointSet ps({{0, 0}, {5, 0}, {0, 5}, {5, 5}});
  EXPECT_NEAR(visible_perimeter(ps, StackingOrder::from_sequence({3, 1, 0, 2})).total, 4 * kTwoPi, 1e-12);
}

TEST(VisiblePerimeter, MatchesQuadratureOnRandomClouds) {
  Rng rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const PointSet ps = random_cloud(rng, 12, 3.0);
    const auto f = random_order(ps.size(), rng.next());
    const auto r = visible_perimeter(ps, f);
    for (std::size_t i = 0; i < ps.size(); ++i) {
      EXPECT_NEAR(r.per_disk[i], testing::quadrature_visible(ps, f, i, 100000), 2e-4);
    }
  }
}

TEST(LimitPerimeter, CollinearTriple) {
  EXPECT_NEAR(limit_visible_perimeter(kTriple, StackingOrder::identity(3)).total, 4 * kPi, 1e-12);
}

TEST(LimitPerimeter, UnitSquare) {
  // 2pi + pi + 3pi/4 + pi/2
  const auto r = limit_visible_perimeter(kSquare, StackingOrder::identity(4));
  EXPECT_NEAR(r.total, 17.0 * kPi / 4.0, 1e-12);
  ASSERT_EQ(r.trace.taus.size(), 4u);
  EXPECT_NEAR(r.trace.taus[3], kPi / 2, 1e-12);
  EXPECT_NEAR(r.trace.per[3], 4.0, 1e-12);
}

TEST(LimitPerimeter, ApproachedByContraction) {
  Rng rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    const PointSet ps = random_cloud(rng, 15, 4.0);
    const auto f = random_order(ps.size(), rng.next());
    const double lim = limit_visible_perimeter(ps, f).total;
    const double exact = visible_perimeter(scale(ps, 1e-4 / ps.min_dist()), f).total;
    EXPECT_NEAR(exact, lim, 1e-2 * lim);
  }
}

TEST(PerimeterGap, CollinearTripleStep) {
  const auto trace = limit_visible_perimeter(kTriple, StackingOrder::identity(3)).trace;
  const auto gaps = perimeter_gap_trace(trace, 1.0);
  ASSERT_EQ(gaps.size(), 2u);
  EXPECT_EQ(gaps[1].rank, 3u);
  EXPECT_NEAR(gaps[1].gap, 2.0, 1e-12);
  EXPECT_NEAR(gaps[1].bound, kPi * kPi / 5.0, 1e-12);
}

TEST(PerimeterGap, SquareFourthStep) {
  const auto trace = limit_visible_perimeter(kSquare, StackingOrder::identity(4)).trace;
  const auto gaps = perimeter_gap_trace(trace, 1.0);
  EXPECT_NEAR(gaps[2].gap, 4.0 - (2.0 + std::sqrt(2.0)), 1e-12);
  EXPECT_GE(gaps[2].gap, gaps[2].bound);
}

TEST(PerimeterGap, HoldsForRandomOrders) {
  Rng rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const PointSet ps = random_dense(60, 2.0, rng.next());
    const auto trace = limit_visible_perimeter(ps, random_order(ps.size(), rng.next())).trace;
    for (const auto& g : perimeter_gap_trace(trace, ps.min_dist())) EXPECT_GE(g.gap, g.bound - 1e-9);
  }
}

// Moving a disk to the front cannot reduce its own visible arc, and cannot
// increase anyone else's.
TEST(Properties, PromotionMonotonicity) {
  Rng rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const PointSet ps = random_cloud(rng, 10, 2.5);
    const auto f = random_order(ps.size(), rng.next());
    const std::size_t d = rng.next() % ps.size();
    std::vector<std::size_t> seq(f.sequence().begin(), f.sequence().end());
    seq.erase(std::find(seq.begin(), seq.end(), d));
    seq.insert(seq.begin(), d);
    const auto g = StackingOrder::from_sequence(seq);
    const auto before = visible_perimeter(ps, f);
    const auto after = visible_perimeter(ps, g);
    EXPECT_GE(after.per_disk[d], before.per_disk[d] - 1e-12);
    for (std::size_t i = 0; i < ps.size(); ++i) {
      if (i != d) EXPECT_LE(after.per_disk[i], before.per_disk[i] + 1e-12);
    }
  }
}

TEST(Properties, RigidMotionInvariance) {
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const PointSet ps = random_cloud(rng, 14, 3.0);
    const auto f = random_order(ps.size(), rng.next());
    const double a = rng.uniform(0, kTwoPi);
    const Point t{rng.uniform(-50, 50), rng.uniform(-50, 50)};
    std::vector<Point> moved;
    for (Point p : ps) moved.push_back(Point{std::cos(a) * p.x - std::sin(a) * p.y, std::sin(a) * p.x + std::cos(a) * p.y} + t);
    const PointSet qs(moved);
    EXPECT_NEAR(visible_perimeter(qs, f).total, visible_perimeter(ps, f).total, 1e-9);
    EXPECT_NEAR(limit_visible_perimeter(qs, f).total, limit_visible_perimeter(ps, f).total, 1e-9);
  }
}

}  // namespace
}  // namespace visper
