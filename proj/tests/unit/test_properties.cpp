// Randomised checks of the invariants each module promises. Every test draws
// from a fixed seed so failures reproduce.
#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "generators.hpp"
#include "genii/dataset.hpp"
#include "genii/envelope.hpp"
#include "genii/errors.hpp"
#include "genii/filters.hpp"
#include "genii/gene.hpp"
#include "genii/marks.hpp"
#include "genii/metaball.hpp"
#include "genii/path.hpp"
#include "genii/path_generators.hpp"
#include "genii/polygon_ops.hpp"
#include "genii/render.hpp"
#include "oracles.hpp"
#include "svg_scan.hpp"

using namespace genii;
using genii::testing::TestRng;

namespace {

constexpr int kTrials = 200;

std::vector<std::optional<Point>> random_raw(TestRng& rng, std::size_t max_n) {
  std::uniform_int_distribution<std::size_t> n(1, max_n);
  std::uniform_real_distribution<double> u(-0.5, 1.5);
  std::bernoulli_distribution hole(0.1);
  std::vector<std::optional<Point>> raw(n(rng));
  for (auto& p : raw)
    if (!hole(rng)) p = Point{u(rng), u(rng)};
  raw.push_back(Point{u(rng), u(rng)});
  return raw;
}

// Distinct vertices in the unit square, so every edge has a direction.
FlowPath random_path(TestRng& rng, std::size_t min_n, std::size_t max_n, bool with_jumps) {
  std::uniform_int_distribution<std::size_t> n(min_n, max_n);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  std::vector<Point> v(n(rng));
  for (auto& p : v) p = {u(rng), u(rng)};
  std::vector<std::size_t> jumps;
  if (with_jumps && v.size() > 2) {
    std::bernoulli_distribution jump(0.2);
    for (std::size_t e = 0; e + 1 < v.size(); ++e)
      if (jump(rng)) jumps.push_back(e);
  }
  return FlowPath(v, jumps);
}

PathSpec random_spec(TestRng& rng) {
  std::uniform_int_distribution<int> mode(0, static_cast<int>(PathMode::random));
  PathSpec spec;
  spec.mode = static_cast<PathMode>(mode(rng));
  if (spec.mode == PathMode::user_points) spec.mode = PathMode::ring;
  std::uniform_int_distribution<std::size_t> count(2, 40);
  spec.point_count = count(rng);
  if (spec.mode == PathMode::peano) {
    spec.order = std::uniform_int_distribution<int>(1, 2)(rng);
    spec.point_count = spec.order == 1 ? 9 : 81;
  } else if (is_space_filling(spec.mode)) {
    const int order = std::uniform_int_distribution<int>(1, 3)(rng);
    const std::size_t side = std::size_t{1} << order;
    spec.point_count = side * side;
    if (spec.mode == PathMode::hilbert || spec.mode == PathMode::z_mirror ||
        spec.mode == PathMode::gray)
      spec.order = order;
  }
  spec.rotation_deg = std::uniform_real_distribution<double>(-180, 180)(rng);
  return spec;
}

}  // namespace

TEST(PathProperties, NormalizeIsIdempotent) {
  TestRng rng(101);
  for (int t = 0; t < kTrials; ++t) {
    const auto raw = random_raw(rng, 30);
    const FlowPath once = normalize_path(raw);
    EXPECT_EQ(normalize_path(once), once);
    for (Point v : once.vertices()) {
      EXPECT_TRUE(std::isfinite(v.x) && std::isfinite(v.y));
      EXPECT_TRUE(v.x >= 0 && v.x <= 1 && v.y >= 0 && v.y <= 1);
    }
  }
}

TEST(PathProperties, NormalsAreUnitAndOrthogonal) {
  TestRng rng(102);
  for (int t = 0; t < kTrials; ++t) {
    const FlowPath p = random_path(rng, 2, 20, false);
    for (std::size_t e = 0; e < p.edges().size(); ++e) {
      const Point a = p.edge_start(e), b = p.edge_end(e);
      const Point n = edge_normal(a, b);
      const Point d = (b - a) / distance(a, b);
      EXPECT_NEAR(dot(d, n), 0.0, 1e-12);
      EXPECT_NEAR(std::hypot(n.x, n.y), 1.0, 1e-12);
      EXPECT_GT(d.x * n.y - d.y * n.x, 0.0);  // counter-clockwise of the direction
    }
  }
}

TEST(PathProperties, WalkAlternatesAndCounts) {
  TestRng rng(103);
  for (int t = 0; t < kTrials; ++t) {
    const FlowPath p = random_path(rng, 1, 40, true);
    const auto steps = walk(p);
    ASSERT_EQ(steps.size(), 2 * p.size() - 1);
    std::size_t vertices = 0, edges = 0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
      const bool want_vertex = i % 2 == 0;
      EXPECT_EQ(steps[i].kind == WalkStep::Kind::vertex, want_vertex);
      EXPECT_EQ(steps[i].index, i / 2);
      if (!want_vertex) EXPECT_EQ(steps[i].jump, p.edge(i / 2).is_jump());
      (want_vertex ? vertices : edges)++;
    }
    EXPECT_EQ(vertices, p.size());
    EXPECT_EQ(edges, p.size() - 1);
    for (const Edge& e : p.edges()) EXPECT_EQ(e.to_index, e.from_index + 1);
  }
}

TEST(GeneratorProperties, OutputIsNormalizedAndDeterministic) {
  TestRng rng(104);
  for (int t = 0; t < kTrials; ++t) {
    const PathSpec spec = random_spec(rng);
    const Seed seed{static_cast<std::uint32_t>(rng())};
    const FlowPath p = generate(spec, seed);
    EXPECT_EQ(normalize_path(p), p) << to_string(spec.mode);
    EXPECT_EQ(generate(spec, seed), p) << to_string(spec.mode);
  }
}

TEST(GeneratorProperties, SpaceFillingMapsAreBijective) {
  using Map = GridPoint (*)(int, std::uint64_t);
  const std::pair<Map, std::int64_t> maps[] = {
      {hilbert_d2xy, 2}, {z_mirror_d2xy, 2}, {gray_d2xy, 2}, {peano_d2xy, 3}};
  for (const auto& [map, base] : maps) {
    for (int order = 1; order <= 4; ++order) {
      std::int64_t side = 1;
      for (int i = 0; i < order; ++i) side *= base;
      std::vector<bool> hit(static_cast<std::size_t>(side * side), false);
      for (std::uint64_t i = 0; i < hit.size(); ++i) {
        const GridPoint g = map(order, i);
        ASSERT_TRUE(g.x >= 0 && g.x < side && g.y >= 0 && g.y < side);
        ASSERT_FALSE(hit[static_cast<std::size_t>(g.y * side + g.x)]);
        hit[static_cast<std::size_t>(g.y * side + g.x)] = true;
      }
    }
  }
  using RasterMap = GridPoint (*)(std::int64_t, std::uint64_t);
  for (RasterMap map : {sweep_d2xy, scan_d2xy, diagonal_d2xy}) {
    for (std::int64_t side = 1; side <= 16; ++side) {
      std::vector<bool> hit(static_cast<std::size_t>(side * side), false);
      for (std::uint64_t i = 0; i < hit.size(); ++i) {
        const GridPoint g = map(side, i);
        ASSERT_TRUE(g.x >= 0 && g.x < side && g.y >= 0 && g.y < side);
        ASSERT_FALSE(hit[static_cast<std::size_t>(g.y * side + g.x)]);
        hit[static_cast<std::size_t>(g.y * side + g.x)] = true;
      }
    }
  }
}

TEST(GeneratorProperties, HilbertAndPeanoTakeUnitSteps) {
  for (int order = 1; order <= 4; ++order) {
    for (auto [map, base] : {std::pair{hilbert_d2xy, 2}, std::pair{peano_d2xy, 3}}) {
      std::uint64_t n = 1;
      for (int i = 0; i < 2 * order; ++i) n *= static_cast<std::uint64_t>(base);
      for (std::uint64_t i = 1; i < n; ++i) {
        const GridPoint a = map(order, i - 1), b = map(order, i);
        ASSERT_EQ(std::abs(a.x - b.x) + std::abs(a.y - b.y), 1) << "order " << order << " i " << i;
      }
    }
  }
}

TEST(EnvelopeProperties, ChainsStayOnTheirSide) {
  TestRng rng(105);
  std::uniform_real_distribution<double> extent(0.01, 0.3);
  for (int t = 0; t < kTrials; ++t) {
    const FlowPath p = random_path(rng, 2, 12, false);
    EnvelopeSpec spec;
    spec.top_extent = extent(rng);
    spec.bottom_extent = extent(rng);
    const Envelope e = build_envelope(p, spec);
    ASSERT_EQ(e.top.size(), p.size());
    ASSERT_EQ(e.bottom.size(), p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      // Both chains are offset along the mean of the adjacent edge normals.
      Point n{0, 0};
      if (i > 0) n = n + e.normals[i - 1];
      if (i + 1 < p.size()) n = n + e.normals[i];
      if (std::hypot(n.x, n.y) < 1e-6) continue;  // the path doubles back here
      EXPECT_GT(dot(e.top[i] - p.vertex(i), n), 0.0);
      EXPECT_LT(dot(e.bottom[i] - p.vertex(i), n), 0.0);
    }
    const Envelope again = build_envelope(p, spec);
    EXPECT_EQ(again.top, e.top);
    EXPECT_EQ(again.bottom, e.bottom);
    EXPECT_EQ(again.region, e.region);
  }
}

TEST(EnvelopeProperties, ClipStaysInsideRegion) {
  TestRng rng(106);
  std::uniform_real_distribution<double> u(-0.2, 1.2);
  for (int t = 0; t < kTrials; ++t) {
    const FlowPath p = random_path(rng, 2, 10, true);
    if (p.draw_edges().empty()) continue;
    EnvelopeSpec spec;
    spec.top_extent = 0.15;
    spec.bottom_extent = 0.05;
    const Envelope e = build_envelope(p, spec);
    Ring tri{{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}};
    if (signed_area(tri) < 0) std::reverse(tri.begin(), tri.end());
    for (const auto& poly : clip_to_envelope(Region{Polygon{tri, {}}}, e)) {
      for (Point v : poly.outer) EXPECT_TRUE(polygon::contains(e.region, v, 1e-9));
      for (const auto& h : poly.holes)
        for (Point v : h) EXPECT_TRUE(polygon::contains(e.region, v, 1e-9));
    }
  }
}

TEST(MarkProperties, CountAndZOrder) {
  TestRng rng(107);
  std::uniform_real_distribution<double> h(0, 1);
  std::uniform_int_distribution<std::size_t> nd(0, 15);
  for (int t = 0; t < kTrials; ++t) {
    const FlowPath p = random_path(rng, 2, 14, true);
    if (p.draw_edges().empty()) continue;
    EnvelopeSpec es;
    es.top_extent = 0.1;
    es.bottom_extent = 0.0;
    es.side = SidePolicy::top_only;
    const Envelope e = build_envelope(p, es);
    std::vector<Datum> data(nd(rng));
    for (std::size_t i = 0; i < data.size(); ++i) {
      data[i].index = i;
      data[i].height = h(rng);
    }
    const Placement pl = place_marks(p, e, MarkSpec{}, data);
    ASSERT_EQ(pl.marks.size(), std::min(p.draw_edges().size(), data.size()));
    for (std::size_t k = 0; k < pl.marks.size(); ++k) {
      EXPECT_FALSE(p.edge(pl.marks[k].edge_index).is_jump());
      if (k > 0) {
        EXPECT_GT(pl.marks[k].z_order, pl.marks[k - 1].z_order);
        EXPECT_GT(pl.marks[k].edge_index, pl.marks[k - 1].edge_index);
      }
    }
  }
}

TEST(MarkProperties, ScaleHeightIsLinear) {
  TestRng rng(108);
  std::uniform_real_distribution<double> u(0, 1);
  for (int t = 0; t < 1000; ++t) {
    const double range = 1 + 100 * u(rng);
    const double extent = u(rng);
    const double a = range * u(rng) / 2, b = range * u(rng) / 2;
    EXPECT_NEAR(scale_height(a + b, range, extent),
                scale_height(a, range, extent) + scale_height(b, range, extent), 1e-12);
  }
}

TEST(FilterProperties, MetaballFieldSymmetries) {
  TestRng rng(109);
  std::uniform_real_distribution<double> u(0, 1);
  for (int t = 0; t < kTrials; ++t) {
    std::vector<Ball> balls(4);
    for (auto& b : balls) b = {{u(rng), u(rng)}, 0.05 + 0.1 * u(rng)};
    const Point p{u(rng), u(rng)};
    const double f = metaball_field(p, balls);
    auto shuffled = balls;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_NEAR(metaball_field(p, shuffled), f, 1e-12 * std::max(1.0, f));
    const Point shift{u(rng) - 0.5, u(rng) - 0.5};
    for (auto& b : shuffled) b.center = b.center + shift;
    EXPECT_NEAR(metaball_field(p + shift, shuffled), f, 1e-9 * std::max(1.0, f));
  }
}

TEST(FilterProperties, MetaballContourSitsOnThreshold) {
  TestRng rng(110);
  std::uniform_real_distribution<double> u(0.2, 0.8);
  for (int t = 0; t < 20; ++t) {
    std::vector<Ball> balls(3);
    for (auto& b : balls) b = {{u(rng), u(rng)}, 0.04 + 0.06 * (u(rng) - 0.2)};
    const int res = 64;
    const FieldGrid grid = metaball_grid(balls, res);
    const double diag = grid.cell * std::sqrt(2.0);
    for (const auto& poly : metaball_merge(balls, 1.0, res)) {
      for (Point q : poly.outer) {
        const double h = 1e-6;
        const double gx = (metaball_field(q + Point{h, 0}, balls) -
                           metaball_field(q - Point{h, 0}, balls)) / (2 * h);
        const double gy = (metaball_field(q + Point{0, h}, balls) -
                           metaball_field(q - Point{0, h}, balls)) / (2 * h);
        // The gradient can vary inside a cell, so compare against the larger of
        // the point gradient and the secant over one cell diagonal.
        double slope = std::hypot(gx, gy);
        for (Point d : {Point{diag, 0}, Point{0, diag}, Point{-diag, 0}, Point{0, -diag}})
          slope = std::max(slope, std::abs(metaball_field(q + d, balls) - 1.0) / diag);
        EXPECT_LE(std::abs(metaball_field(q, balls) - 1.0), slope * diag);
      }
    }
  }
}

TEST(FilterProperties, FiltersAreDeterministic) {
  TestRng rng(111);
  std::uniform_real_distribution<double> u(0, 0.8);
  for (int t = 0; t < 50; ++t) {
    std::vector<MarkGeometry> marks(3);
    for (std::size_t i = 0; i < marks.size(); ++i) {
      const double x = u(rng), y = u(rng);
      marks[i].area = Region{Polygon{{{x, y}, {x + 0.2, y}, {x + 0.2, y + 0.2}, {x, y + 0.2}}, {}}};
      marks[i].z_order = i;
    }
    for (CombineMode m : {CombineMode::overlap, CombineMode::union_, CombineMode::subtract,
                          CombineMode::intersect}) {
      const auto a = combine(marks, m);
      const auto b = combine(marks, m);
      ASSERT_EQ(a.size(), b.size());
      for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].area, b[i].area);
    }
    const auto sa = smooth(marks, 2), sb = smooth(marks, 2);
    for (std::size_t i = 0; i < sa.size(); ++i) EXPECT_EQ(sa[i].area, sb[i].area);
    const auto ra = round_corners(marks, 0.05), rb = round_corners(marks, 0.05);
    for (std::size_t i = 0; i < ra.size(); ++i) EXPECT_EQ(ra[i].area, rb[i].area);
  }
}

TEST(DataProperties, DatasetRoundTrip) {
  TestRng rng(112);
  for (int t = 0; t < kTrials; ++t) {
    const Dataset d = genii::testing::random_dataset(rng, 0, 12);
    const std::string text = serialize_dataset(d);
    EXPECT_EQ(parse_dataset(text).dataset, d);
    EXPECT_EQ(serialize_dataset(parse_dataset(text).dataset), text);
  }
}

TEST(DataProperties, ResolveIsPureAndBounded) {
  TestRng rng(113);
  for (int t = 0; t < kTrials; ++t) {
    const Dataset d = genii::testing::random_dataset(rng, 1, 12);
    MappingSpec height{Channel::mark_height, Source::value_over_range, 0, {}, {}};
    MappingSpec colour{Channel::colour, Source::index, 0, {"#111111", "#222222", "#333333"}, {}};
    for (std::size_t i = 0; i < d.categories.size(); ++i) {
      const Attribute a = resolve(height, d, i);
      const double v = std::get<double>(a);
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0);
      EXPECT_EQ(resolve(height, d, i), a);
      EXPECT_EQ(resolve(colour, d, i), resolve(colour, d, i % 3));
    }
    EXPECT_THROW(resolve(height, d, d.categories.size()), Error);
  }
}

TEST(GeneProperties, SerializeIsAFixpoint) {
  TestRng rng(114);
  for (int t = 0; t < kTrials; ++t) {
    const Gene g = genii::testing::random_gene(rng, t % 2 == 0);
    const std::string once = serialize_gene(g);
    EXPECT_EQ(parse_gene(once), g);
    EXPECT_EQ(serialize_gene(parse_gene(once)), once);
    EXPECT_EQ(parse_gene(once).seed(), Seed{hash_name(g.name)});
  }
}

TEST(GeneProperties, ValidationNeverThrowsOnArbitraryBytes) {
  TestRng rng(115);
  for (int t = 0; t < 2000; ++t) {
    const std::string text = t % 2 ? genii::testing::random_bytes(rng, 200)
                                   : genii::testing::mutated_gene_text(rng);
    std::vector<SchemaIssue> issues;
    ASSERT_NO_THROW(issues = validate_gene(text));
    if (issues.empty()) {
      EXPECT_NO_THROW(parse_gene(text));
    } else {
      EXPECT_THROW(parse_gene(text), SchemaError);
    }
  }
}

TEST(RenderProperties, OutputStaysInViewportAndIsWellFormed) {
  TestRng rng(116);
  for (int t = 0; t < 60; ++t) {
    const Gene g = genii::testing::random_gene(rng, true);
    const Dataset d = genii::testing::random_dataset(rng, 1, 10);
    std::string svg;
    try {
      svg = render(g, d).svg;
    } catch (const Error&) {
      // Random genes can ask for combinations with no drawable result; that
      // must surface as a typed error, never a malformed document.
      continue;
    }
    const auto scan = genii::testing::scan_svg(svg);
    ASSERT_TRUE(scan.well_formed) << scan.problem;
    for (Point p : scan.coordinates) {
      EXPECT_GE(p.x, 0.0);
      EXPECT_LE(p.x, scan.width);
      EXPECT_GE(p.y, 0.0);
      EXPECT_LE(p.y, scan.height);
    }
    for (const auto& id : scan.referenced_ids) EXPECT_TRUE(scan.defined_ids.contains(id)) << id;
  }
}

TEST(RenderProperties, DpiScalesUniformly) {
  TestRng rng(117);
  for (int t = 0; t < 30; ++t) {
    const Gene g = genii::testing::random_gene(rng, true);
    const Dataset d = genii::testing::random_dataset(rng, 1, 8);
    RenderOptions lo, hi;
    lo.dpi = 96;
    hi.dpi = 192;
    std::string a, b;
    try {
      a = render(g, d, lo).svg;
      b = render(g, d, hi).svg;
    } catch (const Error&) {
      continue;
    }
    const auto sa = genii::testing::scan_svg(a), sb = genii::testing::scan_svg(b);
    EXPECT_NEAR(sb.width, 2 * sa.width, 2e-4);
    EXPECT_NEAR(sb.height, 2 * sa.height, 2e-4);
    ASSERT_EQ(sa.coordinates.size(), sb.coordinates.size());
    for (std::size_t i = 0; i < sa.coordinates.size(); ++i) {
      // Four printed decimals bound the rounding on each side.
      EXPECT_NEAR(sb.coordinates[i].x, 2 * sa.coordinates[i].x, 2e-4);
      EXPECT_NEAR(sb.coordinates[i].y, 2 * sa.coordinates[i].y, 2e-4);
    }
  }
}
