#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "genii/gene.hpp"
#include "generators.hpp"

using namespace genii;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(GENII_SAMPLES_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kMinimal = R"({
  "geneVersion": 1,
  "name": "min",
  "path": {"mode": "inline_linear", "pointCount": 4},
  "object": {"shape": "rect"}
})";

std::vector<std::string> issue_paths(std::string_view text) {
  std::vector<std::string> out;
  for (const auto& i : validate_gene(text)) out.push_back(i.path);
  return out;
}

bool has(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

std::string with(std::string base, const std::string& from, const std::string& to) {
  const auto at = base.find(from);
  EXPECT_NE(at, std::string::npos) << from;
  return base.replace(at, from.size(), to);
}

}  // namespace

TEST(ParseGene, SampleDocument) {
  const Gene g = parse_gene(slurp("bar.gene.json"));
  EXPECT_EQ(g.name, "angled bars");
  EXPECT_EQ(g.path.mode, PathMode::inline_linear);
  EXPECT_EQ(g.path.point_count, 6u);
  EXPECT_DOUBLE_EQ(g.path.rotation_deg, 20);
  EXPECT_EQ(g.mark.shape, Shape::rect);
  ASSERT_EQ(g.mappings.size(), 2u);
  EXPECT_EQ(g.mapping(Channel::colour)->palette.size(), 3u);
  EXPECT_EQ(g.seed(), Seed::from_name("angled bars"));
}

TEST(ParseGene, MinimalUsesDefaults) {
  const Gene g = parse_gene(kMinimal);
  EXPECT_EQ(g.envelope, default_envelope_for("inline_linear"));
  EXPECT_EQ(g.grouping, 1u);
  EXPECT_TRUE(g.filters.empty());
}

TEST(ParseGene, UnknownModeNamesFieldAndChoices) {
  try {
    parse_gene(with(kMinimal, "inline_linear", "wiggly"));
    FAIL();
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.path(), "path.mode");
    const std::string msg = e.issues()[0].message;
    EXPECT_NE(msg.find("wiggly"), std::string::npos);
    EXPECT_NE(msg.find("hilbert"), std::string::npos);
    EXPECT_NE(msg.find("inline_linear"), std::string::npos);
  }
}

TEST(ValidateGene, ReportsEveryViolation) {
  std::string doc = with(kMinimal, "inline_linear", "wiggly");
  doc = with(doc, "\"rect\"", "\"hexagon\"");
  const auto paths = issue_paths(doc);
  EXPECT_TRUE(has(paths, "path.mode"));
  EXPECT_TRUE(has(paths, "object.shape"));
}

TEST(ValidateGene, EmptyAndMalformed) {
  ASSERT_EQ(issue_paths("").size(), 1u);
  EXPECT_EQ(issue_paths("")[0], "");
  EXPECT_EQ(issue_paths("[1,2]")[0], "");
  EXPECT_EQ(issue_paths("{\"geneVersion\":")[0], "");
}

TEST(ValidateGene, RequiredFields) {
  const auto paths = issue_paths("{}");
  EXPECT_TRUE(has(paths, "geneVersion"));
  EXPECT_TRUE(has(paths, "name"));
  EXPECT_TRUE(has(paths, "path"));
  EXPECT_TRUE(has(paths, "object"));
}

TEST(ValidateGene, UnknownFieldsRejected) {
  EXPECT_TRUE(has(issue_paths(with(kMinimal, "\"pointCount\"", "\"pointz\": 1, \"pointCount\"")),
                  "path.pointz"));
}

TEST(ValidateGene, FieldRules) {
  struct Case {
    std::string from, to, path;
  };
  const std::vector<Case> cases{
      {"\"geneVersion\": 1", "\"geneVersion\": 2", "geneVersion"},
      {"\"min\"", "\"\"", "name"},
      {"\"pointCount\": 4", "\"pointCount\": 0", "path.pointCount"},
      {"\"pointCount\": 4", "\"pointCount\": 4, \"order\": 2", "path.order"},
      {"\"pointCount\": 4", "\"pointCount\": 4, \"jumps\": [3]", "path.jumps[0]"},
      {"\"pointCount\": 4", "\"pointCount\": 4, \"points\": [[0,0]]", "path.points"},
      {"\"pointCount\": 4", "\"pointCount\": 4, \"pointDistance\": 0", "path.pointDistance"},
      {"\"shape\": \"rect\"", "\"shape\": \"rect\", \"gap\": 1", "object.gap"},
      {"\"shape\": \"rect\"", "\"shape\": \"rect\", \"colour\": \"nope\"", "object.colour"},
      {"\"shape\": \"rect\"", "\"shape\": \"donut_segment\"", "object.shape"},
      {"\"shape\": \"rect\"", "\"shape\": \"text\"", "object.shape"},
  };
  for (const auto& c : cases)
    EXPECT_TRUE(has(issue_paths(with(kMinimal, c.from, c.to)), c.path)) << c.path;
}

TEST(ValidateGene, EnvelopeRules) {
  const std::string base = with(kMinimal, "\"object\"", "\"envelope\": {ENV}, \"object\"");
  const auto env = [&](const std::string& e) { return issue_paths(with(base, "ENV", e)); };
  EXPECT_TRUE(has(env("\"top\": -0.1"), "envelope.top"));
  EXPECT_TRUE(has(env("\"top\": 0, \"bottom\": 0"), "envelope.top"));
  EXPECT_TRUE(env("\"top\": 0, \"bottom\": 0, \"collapse\": true").empty());
  EXPECT_TRUE(has(env("\"mode\": \"fixed_point\""), "envelope.fixedPoint"));
  EXPECT_TRUE(has(env("\"fixedPoint\": [0.5, 0.5]"), "envelope.fixedPoint"));
  EXPECT_TRUE(has(env("\"side\": \"per_edge\""), "envelope.perEdge"));
  EXPECT_TRUE(has(env("\"perEdge\": [\"centered\"]"), "envelope.perEdge"));
  EXPECT_TRUE(has(env("\"side\": \"sideways\""), "envelope.side"));
  EXPECT_TRUE(env("\"side\": \"per_edge\", \"perEdge\": [\"centered\", \"on_path_below\"]").empty());
}

TEST(ValidateGene, MappingAndFilterRules) {
  const std::string base = with(kMinimal, "\"object\"", "\"mappings\": [MAP], \"filters\": [FIL], \"object\"");
  const auto doc = [&](const std::string& m, const std::string& f) {
    return issue_paths(with(with(base, "MAP", m), "FIL", f));
  };
  EXPECT_TRUE(has(doc(R"({"channel":"colour","source":"index"})", ""), "mappings[0].palette"));
  EXPECT_TRUE(has(doc(R"({"channel":"mark_height","source":"constant"})", ""),
                  "mappings[0].constant"));
  EXPECT_TRUE(has(doc(R"({"channel":"mark_height","source":"value","constant":1})", ""),
                  "mappings[0].constant"));
  EXPECT_TRUE(has(doc(R"({"channel":"mark_height","source":"name"})", ""), "mappings[0].source"));
  EXPECT_TRUE(has(doc(R"({"channel":"vertex_position","source":"value"})", ""),
                  "mappings[0].channel"));
  EXPECT_TRUE(has(doc(R"({"channel":"colour","source":"index","palette":["red"],"gradient":[{"offset":0,"colour":"red"},{"offset":1,"colour":"blue"}]})", ""),
                  "mappings[0].gradient"));
  EXPECT_TRUE(has(doc("", R"({"kind":"opacity"})"), "filters[0].alpha"));
  EXPECT_TRUE(has(doc("", R"({"kind":"opacity","alpha":2})"), "filters[0].alpha"));
  EXPECT_TRUE(has(doc("", R"({"kind":"solid_fill","colour":"red","alpha":1})"), "filters[0].alpha"));
  EXPECT_TRUE(has(doc("", R"({"kind":"linear_gradient","stops":[{"offset":0.5,"colour":"red"},{"offset":0.2,"colour":"red"}]})"),
                  "filters[0].stops[1].offset"));
  EXPECT_TRUE(has(doc("", R"({"kind":"metaball","grid":4})"), "filters[0].grid"));
  EXPECT_TRUE(has(doc("", R"({"kind":"sparkle"})"), "filters[0].kind"));
  EXPECT_TRUE(doc(R"({"channel":"colour","source":"index","palette":["red"]})",
                  R"({"kind":"union"})").empty());
}

TEST(SerializeGene, CanonicalAndStable) {
  const Gene g = parse_gene(slurp("bar.gene.json"));
  const std::string a = serialize_gene(g);
  EXPECT_EQ(a, serialize_gene(g));
  EXPECT_EQ(serialize_gene(parse_gene(a)), a);
  EXPECT_EQ(parse_gene(a), g);
  EXPECT_EQ(a.back(), '\n');
  // Keys sorted at the top level.
  EXPECT_LT(a.find("\"envelope\""), a.find("\"filters\""));
  EXPECT_LT(a.find("\"filters\""), a.find("\"geneVersion\""));
}

TEST(SerializeGene, NameChangeIsLocal) {
  Gene g = parse_gene(kMinimal);
  const std::string a = serialize_gene(g);
  g.name = "mix";
  const std::string b = serialize_gene(g);
  ASSERT_EQ(a.size(), b.size());
  std::size_t diffs = 0;
  std::size_t where = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) {
      ++diffs;
      where = i;
    }
  EXPECT_EQ(diffs, 1u);
  EXPECT_EQ(where, a.find("\"name\": \"min\"") + 11);
}

TEST(SerializeGene, NumbersRoundTripExactly) {
  Gene g = parse_gene(kMinimal);
  g.path.rotation_deg = 0.1 + 0.2;
  g.envelope.top_extent = 1.0 / 3.0;
  const Gene back = parse_gene(serialize_gene(g));
  EXPECT_EQ(back.path.rotation_deg, g.path.rotation_deg);
  EXPECT_EQ(back.envelope.top_extent, g.envelope.top_extent);
}

TEST(SerializeGene, RandomGenesRoundTrip) {
  genii::testing::TestRng rng(1234);
  for (int i = 0; i < 200; ++i) {
    const Gene g = genii::testing::random_gene(rng, i % 2 == 0);
    const std::string text = serialize_gene(g);
    const auto issues = validate_gene(text);
    ASSERT_TRUE(issues.empty()) << issues[0].path << ": " << issues[0].message << "\n" << text;
    const Gene back = parse_gene(text);
    ASSERT_EQ(back, g) << text;
    ASSERT_EQ(serialize_gene(back), text);
  }
}
