#include <gtest/gtest.h>

#include <numbers>

#include "genii/errors.hpp"
#include "genii/filters.hpp"
#include "oracles.hpp"

using namespace genii;

namespace {

MarkGeometry rect_mark(double x0, double y0, double x1, double y1, std::size_t z) {
  MarkGeometry m;
  m.area = {Polygon{{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}, {}}};
  m.placed_bounds = bounds(m.area);
  m.z_order = z;
  m.edge_index = z;
  return m;
}

const Ring kUnitSquare{{0, 0}, {1, 0}, {1, 1}, {0, 1}};

}  // namespace

TEST(Combine, OverlapIsIdentity) {
  const std::vector<MarkGeometry> in{rect_mark(0, 0, 1, 1, 0), rect_mark(0.5, 0.5, 2, 2, 1)};
  const auto out = combine(in, CombineMode::overlap);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].area, in[0].area);
}

TEST(Combine, DisjointUnionKeepsBothComponents) {
  const auto out =
      combine({rect_mark(0, 0, 0.2, 0.2, 0), rect_mark(0.5, 0.5, 0.7, 0.7, 1)}, CombineMode::union_);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].area.size(), 2u);
  EXPECT_NEAR(area(out[0].area), 0.08, 1e-12);
}

TEST(Combine, SubtractContainedLeavesHole) {
  const auto out =
      combine({rect_mark(0, 0, 1, 1, 0), rect_mark(0.25, 0.25, 0.75, 0.75, 1)}, CombineMode::subtract);
  ASSERT_EQ(out.size(), 1u);
  ASSERT_EQ(out[0].area.size(), 1u);
  EXPECT_EQ(out[0].area[0].holes.size(), 1u);
  EXPECT_NEAR(area(out[0].area), 0.75, 1e-12);
  EXPECT_NEAR(genii::testing::region_area_oracle(out[0].area), 0.75, 1e-12);
}

TEST(Combine, IntersectKeepsCommonPart) {
  const auto out =
      combine({rect_mark(0, 0, 1, 1, 0), rect_mark(0.5, 0.5, 2, 2, 1)}, CombineMode::intersect);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_NEAR(area(out[0].area), 0.25, 1e-12);
}

TEST(Combine, CutoutRemovesLaterMarks) {
  const auto out =
      combine({rect_mark(0, 0, 1, 1, 0), rect_mark(0.5, 0, 1.5, 1, 1)}, CombineMode::cutout);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_NEAR(area(out[0].area), 0.5, 1e-12);
  EXPECT_NEAR(area(out[1].area), 1.0, 1e-12);
}

TEST(Combine, StreamBandsFromCoincidentOutlines) {
  // Outer band minus an inner band sharing the same baseline leaves the top
  // stream; the inner band stays as the second stream.
  const auto outer = rect_mark(0, 0, 1, 0.6, 0);
  const auto inner = rect_mark(0, 0, 1, 0.3, 1);
  const auto top = combine({outer, inner}, CombineMode::subtract);
  ASSERT_EQ(top.size(), 1u);
  EXPECT_NEAR(area(top[0].area), 0.3, 1e-12);
  EXPECT_NEAR(bounds(top[0].area).min.y, 0.3, 1e-12);
}

TEST(Combine, RejectsOpenShapes) {
  MarkGeometry line;
  line.lines.push_back({{0, 0}, {1, 1}});
  try {
    combine({rect_mark(0, 0, 1, 1, 0), line}, CombineMode::union_);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonPolygonalInput);
  }
}

TEST(Style, SolidFillBroadcasts) {
  FilterSpec f;
  f.kind = FilterKind::solid_fill;
  f.colour = "#0072B2";
  const auto out = apply_style({rect_mark(0, 0, 1, 1, 0), rect_mark(0, 0, 1, 1, 1),
                                rect_mark(0, 0, 1, 1, 2)},
                               f);
  for (const auto& m : out) EXPECT_EQ(std::get<Colour>(*m.style.fill), (Colour{0x00, 0x72, 0xB2}));
}

TEST(Style, LinearGradientStops) {
  FilterSpec f;
  f.kind = FilterKind::linear_gradient;
  f.stops = {{0, "blue"}, {0.5, "yellow"}, {1, "orange"}};
  const auto out = apply_style({rect_mark(0, 0, 1, 1, 0)}, f);
  const auto& paint = std::get<LinearGradientPaint>(*out[0].style.fill);
  ASSERT_EQ(paint.gradient.stops.size(), 3u);
  EXPECT_EQ(paint.gradient.stops[1].colour, (Colour{255, 255, 0}));
}

TEST(Style, OpacityStrokeAndEffects) {
  std::vector<MarkGeometry> marks{rect_mark(0, 0, 1, 1, 0)};
  FilterSpec op;
  op.kind = FilterKind::opacity;
  op.alpha = 0.5;
  FilterSpec st;
  st.kind = FilterKind::stroke;
  st.colour = "black";
  st.width = 2;
  FilterSpec bl;
  bl.kind = FilterKind::blur;
  bl.amount = 3;
  marks = apply_style(apply_style(apply_style(marks, op), st), bl);
  EXPECT_DOUBLE_EQ(marks[0].style.opacity, 0.5);
  EXPECT_EQ(*marks[0].style.stroke, (Colour{0, 0, 0}));
  EXPECT_DOUBLE_EQ(marks[0].style.stroke_width, 2);
  EXPECT_EQ(marks[0].style.effect->kind, Effect::Kind::blur);
  // Outlines are untouched.
  EXPECT_EQ(marks[0].area, rect_mark(0, 0, 1, 1, 0).area);
}

TEST(Style, BadColourThrows) {
  FilterSpec f;
  f.kind = FilterKind::solid_fill;
  f.colour = "not-a-colour";
  try {
    apply_style({rect_mark(0, 0, 1, 1, 0)}, f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadColour);
  }
}

TEST(RoundCorners, ZeroIsIdentity) {
  const auto in = std::vector<MarkGeometry>{rect_mark(0, 0, 1, 1, 0)};
  EXPECT_EQ(round_corners(in, 0.0)[0].area, in[0].area);
}

TEST(RoundCorners, PerimeterDropMatchesArcAlgebra) {
  // Each corner trades 2r of straight edge for a quarter circle of length
  // pi r / 2: four corners lose (8 - 2 pi) r in total.
  const double r = 0.1;
  const Ring rounded = round_ring_corners(kUnitSquare, r);
  const double drop = perimeter(kUnitSquare) - perimeter(rounded);
  EXPECT_NEAR(drop, (8 - 2 * std::numbers::pi) * r, 1e-3);
  const double expected_area = 1 - (4 - std::numbers::pi) * r * r;
  EXPECT_NEAR(signed_area(rounded), expected_area, 1e-3);
}

TEST(RoundCorners, RadiusTooLarge) {
  try {
    round_corners({rect_mark(0, 0, 0.1, 1, 0)}, 0.2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RadiusTooLarge);
  }
}

TEST(Smooth, DoublesVerticesPerIteration) {
  Ring r = kUnitSquare;
  for (int it = 1; it <= 4; ++it) {
    const Ring s = smooth_ring(kUnitSquare, it);
    EXPECT_EQ(s.size(), kUnitSquare.size() << it);
  }
  EXPECT_EQ(smooth_ring(r, 0), r);
}

TEST(Smooth, ConvergesInsideTheSquare) {
  const Ring s = smooth_ring(kUnitSquare, 6);
  for (Point p : s) EXPECT_TRUE(point_in_ring(p, kUnitSquare, 1e-12));
  const double a = signed_area(s);
  EXPECT_LT(a, 1.0);
  EXPECT_GT(a, std::numbers::pi / 4);
}

TEST(Smooth, OpenPolylineKeepsEnds) {
  const Ring line{{0, 0}, {0.5, 1}, {1, 0}};
  const Ring s = smooth_ring(line, 2, false);
  EXPECT_EQ(s.front(), line.front());
  EXPECT_EQ(s.back(), line.back());
}

TEST(FilterKinds, NamesAndCategories) {
  for (int k = 0; k <= static_cast<int>(FilterKind::shadow); ++k) {
    const auto kind = static_cast<FilterKind>(k);
    EXPECT_EQ(filter_kind_from_string(to_string(kind)), kind);
  }
  EXPECT_TRUE(is_combine(FilterKind::union_));
  EXPECT_TRUE(is_style(FilterKind::opacity));
  EXPECT_FALSE(is_style(FilterKind::metaball));
  EXPECT_EQ(to_string(FilterKind::union_), "union");
}
