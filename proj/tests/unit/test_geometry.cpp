#include <gtest/gtest.h>

#include <numbers>

#include "genii/geometry.hpp"
#include "oracles.hpp"

using namespace genii;

TEST(Geometry, SignedAreaFollowsWinding) {
  const Ring ccw{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  Ring cw(ccw.rbegin(), ccw.rend());
  EXPECT_DOUBLE_EQ(signed_area(ccw), 1.0);
  EXPECT_DOUBLE_EQ(signed_area(cw), -1.0);
  EXPECT_DOUBLE_EQ(signed_area(ccw), genii::testing::shoelace(ccw));
}

TEST(Geometry, AreaSubtractsHoles) {
  Region r{{Ring{{0, 0}, {4, 0}, {4, 4}, {0, 4}}, {Ring{{1, 1}, {1, 2}, {2, 2}, {2, 1}}}}};
  EXPECT_DOUBLE_EQ(area(r), 15.0);
  EXPECT_DOUBLE_EQ(area(r), genii::testing::region_area_oracle(r));
}

TEST(Geometry, Perimeter) {
  const Ring sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  EXPECT_DOUBLE_EQ(perimeter(sq), 4.0);
}

TEST(Geometry, PointInRingWithTolerance) {
  const Ring sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  EXPECT_TRUE(point_in_ring({0.5, 0.5}, sq));
  EXPECT_FALSE(point_in_ring({1.5, 0.5}, sq));
  EXPECT_FALSE(point_in_ring({1.0 + 1e-6, 0.5}, sq));
  EXPECT_TRUE(point_in_ring({1.0 + 1e-6, 0.5}, sq, 1e-5));
}

TEST(Geometry, DistanceToSegment) {
  EXPECT_DOUBLE_EQ(distance_to_segment({0.5, 1}, {0, 0}, {1, 0}), 1.0);
  EXPECT_DOUBLE_EQ(distance_to_segment({2, 0}, {0, 0}, {1, 0}), 1.0);
  EXPECT_DOUBLE_EQ(distance_to_segment({0.3, 0.4}, {0, 0}, {0, 0}), 0.5);
  EXPECT_DOUBLE_EQ(distance_to_segment({0.5, 1}, {0, 0}, {1, 0}),
                   genii::testing::segment_distance({0.5, 1}, {0, 0}, {1, 0}));
}

TEST(Geometry, CircleRingApproximatesArea) {
  const Ring c = circle_ring({0.5, 0.5}, 0.25, 256);
  EXPECT_GT(signed_area(c), 0);
  EXPECT_NEAR(signed_area(c), std::numbers::pi * 0.0625, 1e-4);
  for (Point p : c) EXPECT_NEAR(distance(p, {0.5, 0.5}), 0.25, 1e-12);
}

TEST(Geometry, EllipseRingAxes) {
  const Ring e = ellipse_ring({0, 0}, 2, 1, {0, 1}, 64);
  const Box b = bounds(e);
  EXPECT_NEAR(b.height(), 4, 1e-9);
  EXPECT_NEAR(b.width(), 2, 1e-9);
}

TEST(Geometry, BoundsOfEmptyIsEmpty) {
  EXPECT_TRUE(bounds(std::span<const Point>{}).empty());
  EXPECT_EQ(bounds(Region{}).width(), 0.0);
}
