#include <gtest/gtest.h>

#include "genii/envelope.hpp"
#include "genii/errors.hpp"
#include "genii/path_generators.hpp"
#include "genii/polygon_ops.hpp"
#include "oracles.hpp"

using namespace genii;

namespace {

EnvelopeSpec extents(double top, double bottom) {
  EnvelopeSpec s;
  s.top_extent = top;
  s.bottom_extent = bottom;
  return s;
}

Region rect(double x0, double y0, double x1, double y1) {
  return {Polygon{{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}, {}}};
}

}  // namespace

TEST(Envelope, HorizontalPathOffsetsAlongUpNormal) {
  const FlowPath p = generate(PathSpec{PathMode::inline_linear, 3});
  const Envelope e = build_envelope(p, extents(0.3, 0.3));
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_NEAR(e.top[i].y, 0.8, 1e-12);
    EXPECT_NEAR(e.bottom[i].y, 0.2, 1e-12);
    EXPECT_NEAR(e.top[i].x, p.vertex(i).x, 1e-12);
  }
  EXPECT_NEAR(area(e.region), 0.6, 1e-9);
}

TEST(Envelope, DiagonalEdgeUsesEdgeNormal) {
  const FlowPath p({{0, 0}, {1, 1}});
  const Envelope e = build_envelope(p, extents(0.1, 0.0));
  const double k = std::sqrt(2.0) / 2.0;
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_NEAR(e.top[i].x, p.vertex(i).x - 0.1 * k, 1e-12);
    EXPECT_NEAR(e.top[i].y, p.vertex(i).y + 0.1 * k, 1e-12);
    EXPECT_EQ(e.bottom[i], p.vertex(i));
  }
}

TEST(Envelope, ChainsHaveOnePointPerVertex) {
  const FlowPath p = generate(PathSpec{PathMode::hilbert, 16});
  const Envelope e = build_envelope(p, extents(0.05, 0.05));
  EXPECT_EQ(e.top.size(), p.size());
  EXPECT_EQ(e.bottom.size(), p.size());
  EXPECT_EQ(e.normals.size(), p.edges().size());
  EXPECT_EQ(e.edge_regions.size(), p.edges().size());
}

TEST(Envelope, MiterIsCapped) {
  // A hairpin turn would need an unbounded miter.
  const FlowPath p({{0.1, 0.5}, {0.9, 0.5}, {0.1, 0.51}});
  const Envelope e = build_envelope(p, extents(0.1, 0.1));
  EXPECT_LE(distance(e.top[1], p.vertex(1)), 0.2 + 1e-12);
}

TEST(Envelope, FixedPointPinsChain) {
  const FlowPath p = generate(PathSpec{PathMode::ring, 12});
  EnvelopeSpec s = extents(0.1, 0.1);
  s.mode = EnvelopeMode::fixed_point;
  s.fixed_point = Point{0.5, 0.5};
  s.fixed_chain = Chain::bottom;
  const Envelope e = build_envelope(p, s);
  for (Point b : e.bottom) EXPECT_EQ(b, (Point{0.5, 0.5}));
  // Marks grow inward: the below reach on every edge points to the centre.
  const EdgeFrame f = baseline_for_edge(e, p, 0, Alignment::on_path_below);
  EXPECT_LT(distance(f.base_a + f.reach_a, {0.5, 0.5}), 1e-12);
}

TEST(Envelope, FixedPointWithoutPointThrows) {
  const FlowPath p = generate(PathSpec{PathMode::inline_linear, 3});
  EnvelopeSpec s;
  s.mode = EnvelopeMode::fixed_point;
  EXPECT_THROW(build_envelope(p, s), SchemaError);
}

TEST(Envelope, AllDegenerateThrows) {
  const FlowPath p({{0.5, 0.5}, {0.5, 0.5}});
  try {
    build_envelope(p, extents(0.1, 0.1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegeneratePath);
  }
}

TEST(Envelope, JumpEdgesCarryNoBand) {
  PathSpec spec{PathMode::disjoint_inline, 6};
  const FlowPath p = generate(spec);
  const Envelope e = build_envelope(p, extents(0.1, 0.1));
  EXPECT_TRUE(e.edge_regions[2].empty());
  EXPECT_FALSE(e.edge_regions[0].empty());
  // The jump between rows leaves the middle of the square outside.
  EXPECT_FALSE(polygon::contains(e.region, {0.5, 0.5}));
}

TEST(Baseline, CenteredSplitsExtent) {
  const FlowPath p = generate(PathSpec{PathMode::inline_linear, 2});
  const Envelope e = build_envelope(p, extents(0.2, 0.2));
  const EdgeFrame f = baseline_for_edge(e, p, 0, Alignment::centered);
  EXPECT_EQ(f.base_a, p.vertex(0));
  EXPECT_NEAR(f.signed_extent, 0.4, 1e-12);
  EXPECT_NEAR(f.reach_a.y, 0.4, 1e-12);
}

TEST(Baseline, BelowIsNegative) {
  const FlowPath p = generate(PathSpec{PathMode::inline_linear, 2});
  const Envelope e = build_envelope(p, extents(0.2, 0.3));
  const EdgeFrame f = baseline_for_edge(e, p, 0, Alignment::on_path_below);
  EXPECT_NEAR(f.signed_extent, -0.3, 1e-12);
  EXPECT_NEAR(f.reach_b.y, -0.3, 1e-12);
}

TEST(Baseline, JumpAndDegenerateThrow) {
  const std::vector<std::size_t> jumps{0};
  const FlowPath p({{0, 0.5}, {0.5, 0.5}, {0.5, 0.5}, {1, 0.5}}, jumps);
  const Envelope e = build_envelope(p, extents(0.1, 0.1));
  try {
    baseline_for_edge(e, p, 0, Alignment::centered);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::JumpEdge);
  }
  try {
    baseline_for_edge(e, p, 1, Alignment::centered);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::DegenerateEdge);
  }
}

TEST(SidePolicy, AlternateFlipsByParity) {
  const FlowPath p = generate(PathSpec{PathMode::inline_linear, 4});
  EnvelopeSpec s = extents(0.1, 0.1);
  s.side = SidePolicy::alternate;
  const Envelope e = build_envelope(p, s);
  EXPECT_EQ(alignment_for_edge(e, 0), Alignment::on_path_above);
  EXPECT_EQ(alignment_for_edge(e, 1), Alignment::on_path_below);
  EXPECT_EQ(alignment_for_edge(e, 2), Alignment::on_path_above);
}

TEST(SidePolicy, PerEdgeCycles) {
  const FlowPath p = generate(PathSpec{PathMode::inline_linear, 4});
  EnvelopeSpec s = extents(0.1, 0.1);
  s.side = SidePolicy::per_edge;
  s.per_edge = {Alignment::centered, Alignment::on_path_below};
  const Envelope e = build_envelope(p, s);
  EXPECT_EQ(alignment_for_edge(e, 0), Alignment::centered);
  EXPECT_EQ(alignment_for_edge(e, 1), Alignment::on_path_below);
  EXPECT_EQ(alignment_for_edge(e, 2), Alignment::centered);
}

TEST(SidePolicy, SwitchOnTurnKeepsMarksUpright) {
  // Out and back: the return edge runs right to left so its normal points
  // down; switching puts its marks below the path, which is visually above
  // the reversed edge.
  const FlowPath p({{0.1, 0.4}, {0.9, 0.4}, {0.1, 0.6}});
  EnvelopeSpec s = extents(0.1, 0.1);
  s.side = SidePolicy::top_only;
  s.switch_on_turn = true;
  const Envelope e = build_envelope(p, s);
  EXPECT_EQ(alignment_for_edge(e, 0), Alignment::on_path_above);
  EXPECT_EQ(alignment_for_edge(e, 1), Alignment::on_path_below);
  const EdgeFrame f = baseline_for_edge(e, p, 1, alignment_for_edge(e, 1));
  EXPECT_GT(f.mid_reach().y, 0.0);
}

TEST(SidePolicy, ZigzagDescendingEdgeStaysAbove) {
  const FlowPath p = generate(PathSpec{PathMode::zigzag, 4});
  EnvelopeSpec s = extents(0.1, 0.1);
  s.side = SidePolicy::top_only;
  s.switch_on_turn = true;
  const Envelope e = build_envelope(p, s);
  // Edge 1 descends; its normal still has a positive vertical component.
  ASSERT_LT(p.edge_end(1).y, p.edge_start(1).y);
  EXPECT_EQ(alignment_for_edge(e, 1), Alignment::on_path_above);
  EXPECT_GT(baseline_for_edge(e, p, 1, Alignment::on_path_above).mid_reach().y, 0.0);
}

TEST(Clip, InsideIsUnchanged) {
  const FlowPath p = generate(PathSpec{PathMode::inline_linear, 2});
  const Envelope e = build_envelope(p, extents(0.3, 0.3));
  const Region r = rect(0.2, 0.4, 0.4, 0.6);
  EXPECT_NEAR(area(clip_to_envelope(r, e)), area(r), 1e-12);
}

TEST(Clip, TruncatesAtTopChain) {
  const FlowPath p = generate(PathSpec{PathMode::inline_linear, 2});
  const Envelope e = build_envelope(p, extents(0.3, 0.3));
  const Region clipped = clip_to_envelope(rect(0.2, 0.5, 0.4, 0.95), e);
  EXPECT_NEAR(bounds(clipped).max.y, 0.8, 1e-12);
  EXPECT_NEAR(area(clipped), 0.2 * 0.3, 1e-12);
}

TEST(Clip, OutsideIsEmpty) {
  const FlowPath p = generate(PathSpec{PathMode::inline_linear, 2});
  const Envelope e = build_envelope(p, extents(0.1, 0.1));
  EXPECT_TRUE(clip_to_envelope(rect(0.2, 0.8, 0.4, 0.9), e).empty());
}

TEST(Clip, Polylines) {
  const FlowPath p = generate(PathSpec{PathMode::inline_linear, 2});
  const Envelope e = build_envelope(p, extents(0.1, 0.1));
  const auto lines = clip_to_envelope(std::vector<Ring>{{{0.5, 0.0}, {0.5, 1.0}}}, e);
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_NEAR(distance(lines[0].front(), lines[0].back()), 0.2, 1e-12);
}

TEST(Defaults, RingBandIsInner) {
  const EnvelopeSpec s = default_envelope_for("ring");
  EXPECT_EQ(s.side, SidePolicy::top_only);
  EXPECT_GT(s.top_extent, 0);
  EXPECT_EQ(s.bottom_extent, 0);
}
