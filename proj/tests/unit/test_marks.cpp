#include <gtest/gtest.h>

#include <numeric>

#include "genii/errors.hpp"
#include "genii/marks.hpp"
#include "genii/path_generators.hpp"
#include "genii/polygon_ops.hpp"

using namespace genii;

namespace {

EnvelopeSpec top_band(double extent) {
  EnvelopeSpec s;
  s.top_extent = extent;
  s.bottom_extent = 0.0;
  s.side = SidePolicy::top_only;
  return s;
}

std::vector<Datum> heights(const std::vector<double>& h) {
  std::vector<Datum> out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    Datum d;
    d.index = i;
    d.height = h[i];
    out.push_back(d);
  }
  return out;
}

}  // namespace

TEST(ScaleHeight, Proportional) {
  EXPECT_DOUBLE_EQ(scale_height(50, 100, 0.8), 0.4);
  EXPECT_DOUBLE_EQ(scale_height(0, 100, 0.8), 0.0);
  EXPECT_DOUBLE_EQ(scale_height(100, 100, 0.8), 0.8);
}

TEST(ScaleHeight, ClampsWithWarning) {
  std::vector<std::string> w;
  EXPECT_DOUBLE_EQ(scale_height(150, 100, 0.8, &w), 0.8);
  EXPECT_DOUBLE_EQ(scale_height(-5, 100, 0.8, &w), 0.0);
  EXPECT_EQ(w.size(), 2u);
}

TEST(ScaleHeight, ZeroRange) {
  try {
    scale_height(1, 0, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroRange);
  }
}

TEST(StackOffsets, CumulativeFractions) {
  std::vector<std::string> w;
  const auto s = stack_offsets({2, 3, 5}, 10, &w);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_DOUBLE_EQ(s[0].start, 0.0);
  EXPECT_DOUBLE_EQ(s[0].end, 0.2);
  EXPECT_DOUBLE_EQ(s[1].end, 0.5);
  EXPECT_DOUBLE_EQ(s[2].start, 0.5);
  EXPECT_DOUBLE_EQ(s[2].end, 1.0);
  EXPECT_TRUE(w.empty());
  EXPECT_EQ(stack_offsets({10}, 10), (std::vector<StackInterval>{{0.0, 1.0}}));
}

TEST(StackOffsets, OverflowClampsLastSegment) {
  std::vector<std::string> w;
  const auto s = stack_offsets({4, 4, 4}, 10, &w);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_DOUBLE_EQ(s[0].end, 0.4);
  EXPECT_DOUBLE_EQ(s[1].start, 0.4);
  EXPECT_DOUBLE_EQ(s[1].end, 0.8);
  EXPECT_DOUBLE_EQ(s[2].start, 0.8);
  EXPECT_DOUBLE_EQ(s[2].end, 1.0);
  EXPECT_EQ(w.size(), 1u);
}

TEST(DonutSegments, ProportionalSpans) {
  const auto s = donut_segments({25, 25, 50}, 100);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0], (AngularSpan{0, 90}));
  EXPECT_EQ(s[1], (AngularSpan{90, 180}));
  EXPECT_EQ(s[2], (AngularSpan{180, 360}));
  EXPECT_EQ(donut_segments({100}, 100), (std::vector<AngularSpan>{{0, 360}}));
  EXPECT_DOUBLE_EQ(donut_segments({75}, 100)[0].sweep(), 270.0);
}

TEST(AnnularSector, AreaMatchesFormula) {
  const Region r = annular_sector({0.5, 0.5}, 0.2, 0.4, {0, 90});
  const double expected = std::numbers::pi * (0.16 - 0.04) / 4;
  EXPECT_NEAR(area(r), expected, expected * 2e-3);
  const Region full = annular_sector({0.5, 0.5}, 0.2, 0.4, {0, 360});
  ASSERT_EQ(full.size(), 1u);
  EXPECT_EQ(full[0].holes.size(), 1u);
}

TEST(AnnularSector, StartsAtTwelveAndRunsClockwise) {
  const Region r = annular_sector({0.5, 0.5}, 0.0, 0.4, {0, 90});
  // The quarter from 12 to 3 o'clock is the upper-right quadrant.
  const Box b = bounds(r);
  EXPECT_NEAR(b.min.x, 0.5, 1e-9);
  EXPECT_NEAR(b.min.y, 0.5, 1e-9);
  EXPECT_NEAR(b.max.x, 0.9, 1e-9);
  EXPECT_NEAR(b.max.y, 0.9, 1e-9);
}

TEST(PlaceMarks, AngledBarHeights) {
  const FlowPath p = generate(PathSpec{PathMode::inline_linear, 6});
  const Envelope e = build_envelope(p, top_band(0.4));
  std::vector<double> h;
  for (int k = 1; k <= 5; ++k) h.push_back(scale_height(k, 5, 1.0));
  const Placement pl = place_marks(p, e, MarkSpec{}, heights(h));
  ASSERT_EQ(pl.marks.size(), 5u);
  for (std::size_t k = 0; k < 5; ++k) {
    EXPECT_NEAR(pl.marks[k].placed_height, 0.2 * (k + 1) * 0.4, 1e-12);
    EXPECT_EQ(pl.marks[k].edge_index, k);
    EXPECT_EQ(pl.marks[k].z_order, k);
    EXPECT_NEAR(bounds(pl.marks[k].area).min.y, 0.5, 1e-12);
  }
}

TEST(PlaceMarks, GapNarrowsMarks) {
  const FlowPath p = generate(PathSpec{PathMode::inline_linear, 2});
  const Envelope e = build_envelope(p, top_band(0.4));
  MarkSpec spec;
  spec.gap = 0.5;
  const Placement pl = place_marks(p, e, spec, heights({1.0}));
  EXPECT_NEAR(bounds(pl.marks[0].area).width(), 0.5, 1e-12);
}

TEST(PlaceMarks, MarksStayInsideEnvelope) {
  const FlowPath p = generate(PathSpec{PathMode::zigzag, 7});
  const Envelope e = build_envelope(p, top_band(0.2));
  const Placement pl = place_marks(p, e, MarkSpec{}, heights({1.5, 1, 1, 1, 1, 1}));
  // Placement is analytic; the region lives on the boolean lattice.
  for (const auto& m : pl.marks)
    for (const auto& poly : m.area)
      for (Point v : poly.outer) EXPECT_TRUE(polygon::contains(e.region, v, 1e-9));
}

TEST(PlaceMarks, TouchingCircles) {
  const FlowPath p = generate(PathSpec{PathMode::inline_linear, 5});
  EnvelopeSpec s;
  s.top_extent = 0.2;
  s.bottom_extent = 0.2;
  const Envelope e = build_envelope(p, s);
  MarkSpec spec;
  spec.shape = Shape::circle;
  const Placement pl = place_marks(p, e, spec, heights({1, 1, 1, 1}));
  ASSERT_EQ(pl.marks.size(), 4u);
  for (std::size_t i = 0; i + 1 < pl.marks.size(); ++i) {
    const Circle a = *pl.marks[i].circle;
    const Circle b = *pl.marks[i + 1].circle;
    EXPECT_NEAR(distance(a.center, b.center), a.radius + b.radius, 1e-12);
    EXPECT_NEAR(a.radius, 0.125, 1e-12);
  }
}

TEST(PlaceMarks, JumpEdgesGetNoMarks) {
  PathSpec spec{PathMode::inline_linear, 4};
  spec.jumps = {1};
  const FlowPath p = generate(spec);
  const Envelope e = build_envelope(p, top_band(0.2));
  const Placement pl = place_marks(p, e, MarkSpec{}, heights({1, 1}));
  ASSERT_EQ(pl.marks.size(), 2u);
  EXPECT_EQ(pl.marks[0].edge_index, 0u);
  EXPECT_EQ(pl.marks[1].edge_index, 2u);
}

TEST(PlaceMarks, ExtraDataWarns) {
  const FlowPath p = generate(PathSpec{PathMode::inline_linear, 2});
  const Envelope e = build_envelope(p, top_band(0.2));
  const Placement pl = place_marks(p, e, MarkSpec{}, heights({1, 1, 1}));
  EXPECT_EQ(pl.marks.size(), 1u);
  EXPECT_EQ(pl.warnings.size(), 1u);
}

TEST(PlaceMarks, GroupingSharesIds) {
  const FlowPath p = generate(PathSpec{PathMode::inline_linear, 5});
  const Envelope e = build_envelope(p, top_band(0.2));
  const Placement pl = place_marks(p, e, MarkSpec{}, heights({1, 1, 1, 1}), 2);
  EXPECT_EQ(pl.marks[0].group, 0u);
  EXPECT_EQ(pl.marks[1].group, 0u);
  EXPECT_EQ(pl.marks[2].group, 1u);
  EXPECT_EQ(pl.marks[3].group, 1u);
}

TEST(PlaceMarks, DonutOnOpenPathRejected) {
  const FlowPath p = generate(PathSpec{PathMode::inline_linear, 3});
  const Envelope e = build_envelope(p, top_band(0.2));
  MarkSpec spec;
  spec.shape = Shape::donut_segment;
  try {
    place_marks(p, e, spec, heights({1}));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::ShapeUnsupportedOnPath);
  }
}

TEST(PlaceMarks, DonutOnRingSharesTheCircle) {
  const FlowPath p = generate(PathSpec{PathMode::ring, 24});
  const Envelope e = build_envelope(p, default_envelope_for("ring"));
  MarkSpec spec;
  spec.shape = Shape::donut_segment;
  std::vector<Datum> data(3);
  const double fr[] = {0.25, 0.25, 0.5};
  for (std::size_t i = 0; i < 3; ++i) {
    data[i].index = i;
    data[i].value_fraction = fr[i];
  }
  const Placement pl = place_marks(p, e, spec, data);
  ASSERT_EQ(pl.marks.size(), 3u);
  double total = 0;
  for (const auto& m : pl.marks) total += m.span->sweep();
  EXPECT_NEAR(total, 360.0, 1e-9);
  EXPECT_EQ(*pl.marks[2].span, (AngularSpan{180, 360}));
}

TEST(PlaceMarks, RadialBarSweep) {
  const FlowPath p = generate(PathSpec{PathMode::inline_linear, 2});
  const Envelope e = build_envelope(p, top_band(0.45));
  MarkSpec spec;
  spec.shape = Shape::donut_segment;
  spec.radial = true;
  std::vector<Datum> data(1);
  data[0].value_fraction = 0.75;
  const Placement pl = place_marks(p, e, spec, data);
  ASSERT_EQ(pl.marks.size(), 1u);
  EXPECT_DOUBLE_EQ(pl.marks[0].span->sweep(), 270.0);
}

TEST(PlaceMarks, StarAnchorPullsReach) {
  const FlowPath p = generate(PathSpec{PathMode::ring, 8});
  EnvelopeSpec s;
  s.top_extent = 0.5;
  s.bottom_extent = 0.5;
  const Envelope e = build_envelope(p, s);
  MarkSpec spec;
  spec.shape = Shape::triangle;
  spec.anchor = Alignment::on_path_above;
  spec.star_anchor = Point{0.5, 0.5};
  const Placement pl = place_marks(p, e, spec, heights(std::vector<double>(8, 1.0)));
  ASSERT_EQ(pl.marks.size(), 8u);
  // Full-height triangles put their apex on the anchor.
  for (const auto& m : pl.marks) {
    const Box& b = m.placed_bounds;
    EXPECT_LE(b.min.x, 0.5 + 1e-12);
    EXPECT_GE(b.max.x, 0.5 - 1e-12);
    EXPECT_LE(b.min.y, 0.5 + 1e-12);
    EXPECT_GE(b.max.y, 0.5 - 1e-12);
  }
}

TEST(ScatterPlace, AxisAndThroughData) {
  const std::vector<Point> pts{{0, 0}, {1, 1}};
  const auto axis = scatter_place(pts, ScatterStrategy::vertical_from_axis);
  const auto through = scatter_place(pts, ScatterStrategy::path_through_data);
  ASSERT_EQ(axis.path.size(), 2u);
  ASSERT_EQ(axis.marks.size(), 2u);
  EXPECT_EQ(axis.marks[0].circle->center, (Point{0, 0}));
  EXPECT_EQ(axis.marks[1].circle->center, (Point{1, 1}));
  for (std::size_t i = 0; i < 2; ++i)
    EXPECT_EQ(axis.marks[i].circle->center, through.marks[i].circle->center);
  EXPECT_NE(axis.path, through.path);
  EXPECT_EQ(axis.path.vertex(1).y, 0.0);
}

TEST(ScatterPlace, SinglePoint) {
  const auto r = scatter_place({{0.3, 0.6}}, ScatterStrategy::path_through_data);
  EXPECT_EQ(r.path.size(), 1u);
  EXPECT_EQ(r.marks.size(), 1u);
}

TEST(Shapes, NamesRoundTrip) {
  for (Shape s : {Shape::rect, Shape::circle, Shape::ellipse, Shape::triangle, Shape::arc,
                  Shape::line, Shape::donut_segment, Shape::text})
    EXPECT_EQ(shape_from_string(to_string(s)), s);
  EXPECT_FALSE(shape_from_string("hexagon"));
}
