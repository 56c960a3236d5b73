#include <gtest/gtest.h>

#include <numbers>
#include <set>

#include "genii/errors.hpp"
#include "genii/path_generators.hpp"

using namespace genii;

namespace {

// Hilbert order 1 traced by hand: up the left column, across, down the right.
const std::vector<GridPoint> kHilbert1{{0, 0}, {0, 1}, {1, 1}, {1, 0}};

// Recursive quadrant construction with the same U orientation, used as an
// independent reference for higher orders.
std::vector<GridPoint> hilbert_oracle(int order) {
  if (order == 1) return kHilbert1;
  const auto prev = hilbert_oracle(order - 1);
  const std::int64_t h = std::int64_t{1} << (order - 1);
  std::vector<GridPoint> out;
  // Lower-left: transpose. Upper-left, upper-right: translate. Lower-right:
  // anti-transpose.
  for (auto p : prev) out.push_back({p.y, p.x});
  for (auto p : prev) out.push_back({p.x, p.y + h});
  for (auto p : prev) out.push_back({p.x + h, p.y + h});
  for (auto p : prev) out.push_back({2 * h - 1 - p.y, h - 1 - p.x});
  return out;
}

}  // namespace

TEST(Generate, InlineLinearSpacing) {
  PathSpec spec{PathMode::inline_linear, 3};
  const FlowPath p = generate(spec);
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p.vertex(0), (Point{0, 0.5}));
  EXPECT_EQ(p.vertex(1), (Point{0.5, 0.5}));
  EXPECT_EQ(p.vertex(2), (Point{1, 0.5}));
}

TEST(Generate, PointDistanceOverridesCount) {
  PathSpec spec{PathMode::inline_linear, 99};
  spec.point_distance = 0.25;
  EXPECT_EQ(resolved_point_count(spec), 5u);
  EXPECT_EQ(generate(spec).size(), 5u);
}

TEST(Generate, RingClosesOnItself) {
  PathSpec spec{PathMode::ring, 4};
  const FlowPath p = generate(spec);
  ASSERT_EQ(p.size(), 5u);
  EXPECT_EQ(p.vertex(0), (Point{1.0, 0.5}));
  EXPECT_EQ(p.vertex(4), p.vertex(0));
  for (std::size_t k = 0; k < 4; ++k) {
    const double t = k * std::numbers::pi / 2;
    EXPECT_NEAR(p.vertex(k).x, 0.5 + 0.5 * std::cos(t), 1e-12);
    EXPECT_NEAR(p.vertex(k).y, 0.5 + 0.5 * std::sin(t), 1e-12);
  }
}

TEST(Generate, DisjointInlineSplitsOverTwoRows) {
  PathSpec spec{PathMode::disjoint_inline, 4};
  spec.jumps = {};
  const FlowPath p = generate(spec);
  ASSERT_EQ(p.size(), 4u);
  EXPECT_TRUE(p.edge(1).is_jump());
  EXPECT_FALSE(p.edge(0).is_jump());
  EXPECT_FALSE(p.edge(2).is_jump());
  EXPECT_GT(p.vertex(0).y, p.vertex(2).y);
  EXPECT_EQ(p.vertex(0).y, p.vertex(1).y);
}

TEST(Generate, ExplicitJumpsAreFlagged) {
  PathSpec spec{PathMode::inline_linear, 4};
  spec.jumps = {2};
  const FlowPath p = generate(spec);
  EXPECT_TRUE(p.edge(2).is_jump());
  EXPECT_EQ(p.draw_edges().size(), 2u);
}

TEST(Generate, Deterministic) {
  for (PathMode m : {PathMode::golden_spiral, PathMode::random, PathMode::hilbert}) {
    PathSpec spec{m, 16};
    spec.rotation_deg = 33;
    EXPECT_EQ(generate(spec, Seed{5}), generate(spec, Seed{5}));
  }
}

TEST(Generate, RandomDependsOnSeed) {
  PathSpec spec{PathMode::random, 8};
  EXPECT_NE(generate(spec, Seed{1}), generate(spec, Seed{2}));
}

TEST(Generate, AllVerticesInUnitSquare) {
  for (const auto& info : path_catalogue()) {
    if (info.mode == PathMode::user_points) continue;
    PathSpec spec{info.mode, 16};
    if (info.mode == PathMode::peano) spec.point_count = 81;
    spec.rotation_deg = 37;
    const FlowPath p = generate(spec, Seed{3});
    for (Point v : p.vertices()) {
      EXPECT_GE(v.x, 0);
      EXPECT_LE(v.x, 1);
      EXPECT_GE(v.y, 0);
      EXPECT_LE(v.y, 1);
    }
  }
}

TEST(Generate, UserPointsWithoutPointsThrows) {
  PathSpec spec{PathMode::user_points, 0};
  try {
    generate(spec);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MissingPoints);
  }
}

TEST(Generate, BadSpaceFillingCount) {
  PathSpec spec{PathMode::hilbert, 15};
  try {
    resolved_point_count(spec);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadOrder);
  }
  spec.point_count = 16;
  spec.order = 3;
  EXPECT_THROW(generate(spec), Error);
}

TEST(Hilbert, OrderOneMatchesHandTrace) {
  for (std::uint64_t i = 0; i < 4; ++i) EXPECT_EQ(hilbert_d2xy(1, i), kHilbert1[i]) << i;
}

TEST(Hilbert, MatchesRecursiveOracle) {
  for (int order = 1; order <= 5; ++order) {
    const auto expected = hilbert_oracle(order);
    for (std::uint64_t i = 0; i < expected.size(); ++i)
      ASSERT_EQ(hilbert_d2xy(order, i), expected[i]) << "order " << order << " index " << i;
  }
}

TEST(Hilbert, StartsAtOrigin) {
  for (int k = 1; k <= 8; ++k) EXPECT_EQ(hilbert_d2xy(k, 0), (GridPoint{0, 0}));
}

TEST(Hilbert, IndexOutOfRange) {
  try {
    hilbert_d2xy(1, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IndexOutOfRange);
  }
}

TEST(Hilbert, OrderTwoDistinctAndConnected) {
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  GridPoint prev = hilbert_d2xy(2, 0);
  seen.insert({prev.x, prev.y});
  for (std::uint64_t i = 1; i < 16; ++i) {
    const GridPoint g = hilbert_d2xy(2, i);
    EXPECT_EQ(std::abs(g.x - prev.x) + std::abs(g.y - prev.y), 1);
    seen.insert({g.x, g.y});
    prev = g;
  }
  EXPECT_EQ(seen.size(), 16u);
}

TEST(Peano, OrderOneIsSerpentine) {
  const std::vector<GridPoint> expected{{0, 0}, {0, 1}, {0, 2}, {1, 2}, {1, 1},
                                        {1, 0}, {2, 0}, {2, 1}, {2, 2}};
  for (std::uint64_t i = 0; i < 9; ++i) EXPECT_EQ(peano_d2xy(1, i), expected[i]) << i;
}

TEST(ZMirror, OrderOneIsZ) {
  EXPECT_EQ(z_mirror_d2xy(1, 0), (GridPoint{0, 0}));
  // Odd rows are mirrored.
  EXPECT_EQ(z_mirror_d2xy(1, 2), (GridPoint{1, 1}));
  EXPECT_EQ(z_mirror_d2xy(1, 3), (GridPoint{0, 1}));
}

TEST(Raster, SweepScanDiagonal) {
  EXPECT_EQ(sweep_d2xy(3, 3), (GridPoint{0, 1}));
  // Scan reverses every other row.
  EXPECT_EQ(scan_d2xy(3, 3), (GridPoint{2, 1}));
  EXPECT_EQ(diagonal_d2xy(3, 0), (GridPoint{0, 0}));
  EXPECT_EQ(diagonal_d2xy(3, 8), (GridPoint{2, 2}));
}

TEST(RotatePath, ZeroIsIdentity) {
  const FlowPath p = generate(PathSpec{PathMode::zigzag, 5});
  EXPECT_EQ(rotate_path(p, 0), p);
}

TEST(RotatePath, QuarterTurnOfHorizontalLine) {
  const FlowPath p = rotate_path(generate(PathSpec{PathMode::inline_linear, 2}), 90);
  EXPECT_NEAR(p.vertex(0).x, 0.5, 1e-12);
  EXPECT_NEAR(p.vertex(0).y, 0.0, 1e-12);
  EXPECT_NEAR(p.vertex(1).x, 0.5, 1e-12);
  EXPECT_NEAR(p.vertex(1).y, 1.0, 1e-12);
}

TEST(RotatePath, FullTurnIsIdentity) {
  const FlowPath p = generate(PathSpec{PathMode::golden_spiral, 20});
  const FlowPath r = rotate_path(p, 360);
  for (std::size_t i = 0; i < p.size(); ++i) {
    EXPECT_NEAR(r.vertex(i).x, p.vertex(i).x, 1e-12);
    EXPECT_NEAR(r.vertex(i).y, p.vertex(i).y, 1e-12);
  }
}

TEST(Catalogue, ListsModesWithParameters) {
  const auto& cat = path_catalogue();
  EXPECT_GE(cat.size(), 13u);
  bool hilbert_has_order = false;
  bool has_inline = false;
  for (const auto& info : cat) {
    has_inline |= info.name == "inline_linear";
    if (info.name == "hilbert")
      for (auto p : info.parameters) hilbert_has_order |= p == "order";
    EXPECT_EQ(path_mode_from_string(info.name), info.mode);
    EXPECT_FALSE(info.description.empty());
  }
  EXPECT_TRUE(has_inline);
  EXPECT_TRUE(hilbert_has_order);
  EXPECT_FALSE(path_mode_from_string("wiggly"));
}
