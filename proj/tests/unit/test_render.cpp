#include <gtest/gtest.h>

#include <fstream>
#include <regex>
#include <sstream>

#include "genii/errors.hpp"
#include "genii/render.hpp"
#include "genii/svg.hpp"
#include "svg_scan.hpp"

using namespace genii;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(GENII_SAMPLES_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Gene bar_gene() { return parse_gene(slurp("bar.gene.json")); }
Dataset sales() { return parse_dataset(slurp("sales.data.json")).dataset; }

}  // namespace

TEST(ToPixels, Examples) {
  EXPECT_DOUBLE_EQ(to_pixels(2.54, 96), 96.0);
  EXPECT_NEAR(to_pixels(4.4, 96), 4.4 * 96 / 2.54, 1e-12);
  EXPECT_NEAR(to_pixels(4.4, 96), 166.2992126, 1e-6);
  EXPECT_EQ(to_pixels(0, 96), 0.0);
}

TEST(SvgNumber, FixedFourDecimalsTrimmed) {
  EXPECT_EQ(svg::number(1.0), "1");
  EXPECT_EQ(svg::number(0.5), "0.5");
  EXPECT_EQ(svg::number(166.29921259), "166.2992");
  EXPECT_EQ(svg::number(-0.00001), "0");
  EXPECT_EQ(svg::number(-0.0), "0");
  EXPECT_EQ(svg::number(-2.25), "-2.25");
  EXPECT_EQ(svg::number(1e6), "1000000");
}

TEST(SvgEscape, Markup) {
  EXPECT_EQ(svg::escape("a<b>&\"'"), "a&lt;b&gt;&amp;&quot;&apos;");
  const std::string safe = svg::comment_safe("{\"name\":\"a--b\"}");
  EXPECT_EQ(safe.find("--"), std::string::npos);
}

TEST(Affine, FlipsYOnce) {
  const svg::Affine a{100, 200, 10};
  EXPECT_EQ(a.apply({0, 0}), (Point{10, 190}));
  EXPECT_EQ(a.apply({1, 1}), (Point{90, 10}));
}

TEST(SubpixelAudit, FlagsTinyMarks) {
  const Viewport vp{100, 100, 0};
  MarkGeometry tiny;
  tiny.area = {Polygon{{{0, 0}, {0.005, 0}, {0.005, 0.5}, {0, 0.5}}, {}}};
  tiny.placed_bounds = bounds(tiny.area);
  tiny.edge_index = 3;
  MarkGeometry big = tiny;
  big.placed_bounds = Box{{0, 0}, {0.5, 0.5}};
  MarkGeometry flat;
  flat.edge_index = 7;
  flat.placed_bounds = Box{{0.2, 0.5}, {0.4, 0.5}};
  EXPECT_EQ(subpixel_audit({tiny}, vp).size(), 1u);
  EXPECT_TRUE(subpixel_audit({big}, vp).empty());
  const auto w = subpixel_audit({flat}, vp);
  ASSERT_EQ(w.size(), 1u);
  EXPECT_NE(w[0].find("edge 7"), std::string::npos);
}

TEST(Render, BarSampleStructure) {
  const RenderResult r = render(bar_gene(), sales());
  const auto scan = genii::testing::scan_svg(r.svg);
  ASSERT_TRUE(scan.well_formed) << scan.problem;
  EXPECT_NEAR(scan.width, 166.2992, 1e-4);
  EXPECT_EQ(scan.count_shape("rect"), 5u);
  EXPECT_EQ(scan.count("g"), 5u);
  EXPECT_EQ(r.scene.marks.size(), 5u);
  for (Point p : scan.coordinates) {
    EXPECT_GE(p.x, 0);
    EXPECT_LE(p.x, scan.width);
    EXPECT_GE(p.y, 0);
    EXPECT_LE(p.y, scan.height);
  }
}

TEST(Render, Deterministic) {
  EXPECT_EQ(render(bar_gene(), sales()).svg, render(bar_gene(), sales()).svg);
}

TEST(Render, StagesInOrder) {
  const std::string svg = render(bar_gene(), sales()).svg;
  std::size_t last = 0;
  for (int s = 1; s <= 5; ++s) {
    const auto at = svg.find("<!-- stage " + std::to_string(s));
    ASSERT_NE(at, std::string::npos);
    EXPECT_GT(at, last);
    last = at;
  }
  EXPECT_LT(last, svg.find("<path"));
}

TEST(Render, EmptyDatasetIsVacuous) {
  Dataset ds = sales();
  ds.categories.clear();
  RenderOptions opts;
  opts.background = "white";
  opts.emit_debug_path = true;
  const RenderResult r = render(bar_gene(), ds, opts);
  const auto scan = genii::testing::scan_svg(r.svg);
  ASSERT_TRUE(scan.well_formed) << scan.problem;
  EXPECT_EQ(scan.count("rect"), 1u);
  EXPECT_EQ(scan.count("path"), 1u);
  EXPECT_EQ(scan.count("g"), 0u);
}

TEST(Render, DebugSkeletonMovesOnJumps) {
  Gene g = bar_gene();
  g.path.jumps = {2};
  RenderOptions opts;
  opts.emit_debug_path = true;
  const std::string svg = render(g, sales(), opts).svg;
  const auto scan = genii::testing::scan_svg(svg);
  std::string d;
  for (const auto* e : scan.with_tag("path"))
    if (e->attrs.count("class")) d = e->attrs.at("class") == "genii-skeleton" ? e->attrs.at("d") : d;
  ASSERT_FALSE(d.empty());
  EXPECT_EQ(std::count(d.begin(), d.end(), 'M'), 2);
  EXPECT_EQ(std::count(d.begin(), d.end(), 'L'), 4);
}

TEST(Render, DpiScalesUniformly) {
  RenderOptions a;
  a.dpi = 96;
  RenderOptions b;
  b.dpi = 192;
  const auto sa = genii::testing::scan_svg(render(bar_gene(), sales(), a).svg);
  const auto sb = genii::testing::scan_svg(render(bar_gene(), sales(), b).svg);
  ASSERT_EQ(sa.coordinates.size(), sb.coordinates.size());
  for (std::size_t i = 0; i < sa.coordinates.size(); ++i) {
    EXPECT_NEAR(sb.coordinates[i].x, 2 * sa.coordinates[i].x, 2e-4);
    EXPECT_NEAR(sb.coordinates[i].y, 2 * sa.coordinates[i].y, 2e-4);
  }
}

TEST(Render, BadOptions) {
  RenderOptions o;
  o.dpi = 0;
  try {
    render(bar_gene(), sales(), o);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Unrenderable);
  }
  o.dpi = 96;
  o.background = "plaid";
  EXPECT_THROW(render(bar_gene(), sales(), o), Error);
}

TEST(Render, StageErrorsAreNamed) {
  Gene g = bar_gene();
  g.mark.shape = Shape::donut_segment;  // open path, no radial placement
  try {
    render(g, sales());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ShapeUnsupportedOnPath);
    EXPECT_NE(std::string(e.what()).find("stage marks"), std::string::npos);
  }
}

TEST(Render, EmbeddedGeneRoundTrips) {
  Gene g = bar_gene();
  g.name = "double--dash --> trouble";
  const std::string svg = render(g, sales()).svg;
  ASSERT_TRUE(genii::testing::scan_svg(svg).well_formed);
  const auto back = extract_gene(svg);
  ASSERT_TRUE(back);
  EXPECT_EQ(*back, g);
  EXPECT_FALSE(extract_gene("<svg/>"));
}

TEST(Render, GradientDefsAreReferenced) {
  Gene g = bar_gene();
  FilterSpec f;
  f.kind = FilterKind::linear_gradient;
  f.stops = {{0, "blue"}, {0.5, "yellow"}, {1, "orange"}};
  g.filters.push_back(f);
  FilterSpec s;
  s.kind = FilterKind::shadow;
  g.filters.push_back(s);
  const auto scan = genii::testing::scan_svg(render(g, sales()).svg);
  ASSERT_TRUE(scan.well_formed) << scan.problem;
  EXPECT_EQ(scan.count("linearGradient"), 1u);
  EXPECT_EQ(scan.count("stop"), 3u);
  EXPECT_EQ(scan.count("filter"), 1u);
  for (const auto& id : scan.referenced_ids) EXPECT_TRUE(scan.defined_ids.count(id)) << id;
  EXPECT_EQ(scan.referenced_ids, scan.defined_ids);
}

TEST(Render, TextMarksEscaped) {
  Gene g = bar_gene();
  g.mark.shape = Shape::text;
  g.mappings.push_back({Channel::text, Source::name, 0, {}, {}});
  Dataset ds = sales();
  ds.categories[0].name = "<Mon & co>";
  const std::string svg = render(g, ds).svg;
  const auto scan = genii::testing::scan_svg(svg);
  ASSERT_TRUE(scan.well_formed) << scan.problem;
  EXPECT_NE(svg.find("&lt;Mon &amp; co&gt;"), std::string::npos);
}

TEST(Render, ScenePlacedHeightsFollowValues) {
  const Dataset ds = sales();
  const RenderResult r = render(bar_gene(), ds);
  ASSERT_EQ(r.scene.marks.size(), 5u);
  const double reach = 0.4;
  for (std::size_t i = 0; i < 5; ++i) {
    const auto& c = ds.categories[i];
    EXPECT_NEAR(r.scene.marks[i].placed_height, reach * c.value / c.range, 1e-9);
  }
}

TEST(Render, ResolveDataRangePairs) {
  Gene g = bar_gene();
  g.mappings.push_back({Channel::mark_position, Source::value_over_range, 0, {}, {}});
  Dataset ds;
  ds.categories = {{"s", 20, 100}, {"e", 50, 100}, {"s", 10, 100}, {"e", 90, 100}};
  const auto data = resolve_data(g, ds);
  ASSERT_EQ(data.size(), 2u);
  EXPECT_DOUBLE_EQ(data[0].start, 0.2);
  EXPECT_DOUBLE_EQ(data[0].height, 0.3);
  EXPECT_DOUBLE_EQ(data[1].start, 0.1);
  EXPECT_DOUBLE_EQ(data[1].height, 0.8);
}

TEST(Render, ScatterFromData) {
  Gene g = bar_gene();
  g.path.mode = PathMode::user_points;
  g.path_from_data = ScatterMode::scatter_data_order;
  g.mark.shape = Shape::circle;
  Dataset ds = sales();
  ds.categories = {{"x", 0.2, 1}, {"y", 0.3, 1}, {"x", 0.8, 1}, {"y", 0.6, 1}};
  const RenderResult r = render(g, ds);
  ASSERT_EQ(r.scene.marks.size(), 2u);
  EXPECT_EQ(r.scene.path.size(), 2u);
  EXPECT_NEAR(bounds(r.scene.marks[0].area).min.x, 0.17, 1e-2);
}
