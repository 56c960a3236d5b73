#include <gtest/gtest.h>

#include <numbers>

#include "genii/metaball.hpp"
#include "genii/polygon_ops.hpp"
#include "oracles.hpp"

using namespace genii;

namespace {

std::vector<Ball> touching_row() {
  // Four circles along a straight path, each radius half the edge length.
  std::vector<Ball> balls;
  for (int i = 0; i < 4; ++i) balls.push_back({{0.125 + 0.25 * i, 0.5}, 0.125});
  return balls;
}

}  // namespace

TEST(MetaballField, OnCircleIsOne) {
  const std::vector<Ball> b{{{0, 0}, 1}};
  EXPECT_DOUBLE_EQ(metaball_field({1, 0}, b), 1.0);
}

TEST(MetaballField, TwoBallsMidpointIsHalf) {
  const std::vector<Ball> b{{{0, 0}, 1}, {{4, 0}, 1}};
  EXPECT_EQ(metaball_field({2, 0}, b), 0.5);
}

TEST(MetaballField, CentreIsInfinite) {
  const std::vector<Ball> b{{{0.3, 0.3}, 0.1}};
  EXPECT_TRUE(std::isinf(metaball_field({0.3, 0.3}, b)));
}

TEST(MetaballMerge, FarApartStaysSeparate) {
  const std::vector<Ball> b{{{0, 0}, 0.1}, {{5, 0}, 0.1}};
  const Region r = metaball_merge(b, 1.0, 256);
  EXPECT_EQ(r.size(), 2u);
  EXPECT_EQ(genii::testing::field_components(b, 1.0, 256), 2);
}

TEST(MetaballMerge, TouchingRowIsOneBlob) {
  const auto balls = touching_row();
  const Region r = metaball_merge(balls, 1.0, 128);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_TRUE(r[0].holes.empty());
  EXPECT_EQ(genii::testing::field_components(balls, 1.0, 128), 1);
  for (const auto& b : balls) EXPECT_TRUE(polygon::contains(r, b.center));
}

TEST(MetaballMerge, SingleBallApproximatesCircle) {
  const double radius = 0.2;
  const std::vector<Ball> b{{{0.5, 0.5}, radius}};
  const int resolution = 128;
  const Region r = metaball_merge(b, 1.0, resolution);
  ASSERT_EQ(r.size(), 1u);
  const double cell = metaball_grid(b, resolution).cell;
  double worst = 0;
  for (Point p : r[0].outer) worst = std::max(worst, std::abs(distance(p, {0.5, 0.5}) - radius));
  EXPECT_LE(worst, 2 * cell);
  // Dense angular sampling of the analytic circle: every sample is near the
  // contour too.
  for (int k = 0; k < 720; ++k) {
    const double t = k * std::numbers::pi / 360;
    const Point q{0.5 + radius * std::cos(t), 0.5 + radius * std::sin(t)};
    double best = INFINITY;
    const auto& ring = r[0].outer;
    for (std::size_t i = 0; i < ring.size(); ++i)
      best = std::min(best, distance_to_segment(q, ring[i], ring[(i + 1) % ring.size()]));
    ASSERT_LE(best, 2 * cell);
  }
  EXPECT_GT(signed_area(r[0].outer), 0);
}

TEST(MetaballMerge, EmptyInputs) {
  EXPECT_TRUE(metaball_merge({}, 1.0, 64).empty());
  const std::vector<Ball> b{{{0, 0}, 1}};
  EXPECT_TRUE(metaball_merge(b, 0.0, 64).empty());
}

TEST(MetaballMarks, CirclesCollapseIntoBlob) {
  std::vector<MarkGeometry> marks;
  for (const auto& b : touching_row()) {
    MarkGeometry m;
    m.shape = Shape::circle;
    m.circle = Circle{b.center, b.radius};
    m.area = polygon::from_ring(circle_ring(b.center, b.radius));
    marks.push_back(m);
  }
  MarkGeometry other;
  other.shape = Shape::rect;
  other.area = polygon::from_ring({{0, 0}, {0.1, 0}, {0.1, 0.1}});
  marks.push_back(other);
  const auto out = metaball_marks(marks, 1.0, 64);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].area.size(), 1u);
  EXPECT_EQ(out[1].shape, Shape::rect);
}
