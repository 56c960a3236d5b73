#include "genii/gene.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>

#include "json.hpp"

namespace genii {
namespace {

using nlohmann::json;

std::string join_path(const std::string& base, std::string_view key) {
  return base.empty() ? std::string(key) : base + "." + std::string(key);
}

std::string indexed(const std::string& base, std::size_t i) {
  return base + "[" + std::to_string(i) + "]";
}

template <typename Enum>
std::string choices(std::initializer_list<Enum> values) {
  std::string out;
  for (Enum v : values) {
    if (!out.empty()) out += ", ";
    out += to_string(v);
  }
  return out;
}

std::string path_mode_choices() {
  std::string out;
  for (const auto& info : path_catalogue()) {
    if (!out.empty()) out += ", ";
    out += info.name;
  }
  return out;
}

std::string_view to_string(ScatterMode m) {
  return m == ScatterMode::scatter_x_axis ? "scatter_x_axis" : "scatter_data_order";
}

std::optional<ScatterMode> scatter_mode_from_string(std::string_view s) {
  if (s == "scatter_x_axis") return ScatterMode::scatter_x_axis;
  if (s == "scatter_data_order") return ScatterMode::scatter_data_order;
  return std::nullopt;
}

// Walks one JSON object, collecting issues instead of throwing, and flags any
// key nobody asked for.
class Fields {
 public:
  Fields(const json& obj, std::string path, std::vector<SchemaIssue>& issues)
      : obj_(obj), path_(std::move(path)), issues_(issues) {}

  ~Fields() = default;
  Fields(const Fields&) = delete;
  Fields& operator=(const Fields&) = delete;

  std::string at(std::string_view key) const { return join_path(path_, key); }

  const json* find(std::string_view key) {
    seen_.emplace_back(key);
    const auto it = obj_.find(std::string(key));
    return it == obj_.end() ? nullptr : &*it;
  }

  void fail(std::string path, std::string message) {
    issues_.push_back({std::move(path), std::move(message)});
  }

  std::optional<double> number(std::string_view key, bool required = false) {
    const json* v = find(key);
    if (!v) {
      if (required) fail(at(key), "missing field");
      return std::nullopt;
    }
    if (!v->is_number()) {
      fail(at(key), "must be a number");
      return std::nullopt;
    }
    const double d = v->get<double>();
    if (!std::isfinite(d)) {
      fail(at(key), "must be finite");
      return std::nullopt;
    }
    return d;
  }

  std::optional<std::int64_t> integer(std::string_view key, bool required = false) {
    const json* v = find(key);
    if (!v) {
      if (required) fail(at(key), "missing field");
      return std::nullopt;
    }
    if (!v->is_number_integer()) {
      fail(at(key), "must be an integer");
      return std::nullopt;
    }
    if (v->is_number_unsigned() &&
        v->get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      fail(at(key), "integer out of range");
      return std::nullopt;
    }
    return v->get<std::int64_t>();
  }

  std::optional<bool> boolean(std::string_view key) {
    const json* v = find(key);
    if (!v) return std::nullopt;
    if (!v->is_boolean()) {
      fail(at(key), "must be true or false");
      return std::nullopt;
    }
    return v->get<bool>();
  }

  std::optional<std::string> string(std::string_view key, bool required = false) {
    const json* v = find(key);
    if (!v) {
      if (required) fail(at(key), "missing field");
      return std::nullopt;
    }
    if (!v->is_string()) {
      fail(at(key), "must be a string");
      return std::nullopt;
    }
    return v->get<std::string>();
  }

  template <typename Enum, typename Parse>
  std::optional<Enum> enumeration(std::string_view key, Parse parse, const std::string& valid,
                                  bool required = false) {
    const auto s = string(key, required);
    if (!s) return std::nullopt;
    if (auto e = parse(*s)) return e;
    fail(at(key), "unknown value '" + *s + "'; expected one of " + valid);
    return std::nullopt;
  }

  std::optional<Point> point(const json& v, const std::string& path) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
      fail(path, "must be an [x, y] pair of numbers");
      return std::nullopt;
    }
    const Point p{v[0].get<double>(), v[1].get<double>()};
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      fail(path, "must be finite");
      return std::nullopt;
    }
    return p;
  }

  std::optional<Point> point(std::string_view key) {
    const json* v = find(key);
    if (!v) return std::nullopt;
    return point(*v, at(key));
  }

  const json* array(std::string_view key) {
    const json* v = find(key);
    if (v && !v->is_array()) {
      fail(at(key), "must be an array");
      return nullptr;
    }
    return v;
  }

  // Reports keys that were never looked up.
  void finish() {
    for (const auto& [key, _] : obj_.items()) {
      if (std::find(seen_.begin(), seen_.end(), key) == seen_.end())
        fail(at(key), "unknown field");
    }
  }

 private:
  const json& obj_;
  std::string path_;
  std::vector<SchemaIssue>& issues_;
  std::vector<std::string> seen_;
};

const json* object_field(Fields& f, std::string_view key, bool required) {
  const json* v = f.find(key);
  if (!v) {
    if (required) f.fail(f.at(key), "missing field");
    return nullptr;
  }
  if (!v->is_object()) {
    f.fail(f.at(key), "must be an object");
    return nullptr;
  }
  return v;
}

void check_colour(Fields& f, const std::string& path, const std::string& text) {
  try {
    parse_colour(text);
  } catch (const Error&) {
    f.fail(path, "invalid colour '" + text + "'");
  }
}

std::vector<StopSpec> read_stops(Fields& f, const json& arr, const std::string& path) {
  std::vector<StopSpec> stops;
  double last = 0.0;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = indexed(path, i);
    if (!arr[i].is_object()) {
      f.fail(p, "must be an object");
      continue;
    }
    std::vector<SchemaIssue> local;
    Fields s(arr[i], p, local);
    StopSpec stop;
    if (auto o = s.number("offset", true)) {
      stop.offset = *o;
      if (*o < 0.0 || *o > 1.0) s.fail(s.at("offset"), "offset must lie in [0, 1]");
      else if (*o < last) s.fail(s.at("offset"), "offsets must be non-decreasing");
      last = std::max(last, *o);
    }
    if (auto c = s.string("colour", true)) {
      stop.colour = *c;
      check_colour(s, s.at("colour"), *c);
    }
    s.finish();
    for (auto& issue : local) f.fail(std::move(issue.path), std::move(issue.message));
    stops.push_back(std::move(stop));
  }
  return stops;
}

// Fields each filter kind reads; anything else on a filter is rejected so the
// canonical form can omit it.
const std::vector<std::string_view>& filter_fields(FilterKind kind) {
  static const std::map<FilterKind, std::vector<std::string_view>> table{
      {FilterKind::solid_fill, {"colour"}},
      {FilterKind::linear_gradient, {"stops", "angle"}},
      {FilterKind::radial_gradient, {"stops"}},
      {FilterKind::stroke, {"colour", "width"}},
      {FilterKind::opacity, {"alpha"}},
      {FilterKind::metaball, {"threshold", "grid"}},
      {FilterKind::round_corners, {"radius"}},
      {FilterKind::smooth, {"iterations"}},
      {FilterKind::blur, {"amount"}},
      {FilterKind::shadow, {"amount"}},
  };
  static const std::vector<std::string_view> none;
  const auto it = table.find(kind);
  return it == table.end() ? none : it->second;
}

bool uses(FilterKind kind, std::string_view field) {
  const auto& f = filter_fields(kind);
  return std::find(f.begin(), f.end(), field) != f.end();
}

std::string filter_kind_choices() {
  std::string out;
  for (int k = 0; k <= static_cast<int>(FilterKind::shadow); ++k) {
    if (!out.empty()) out += ", ";
    out += to_string(static_cast<FilterKind>(k));
  }
  return out;
}

FilterSpec read_filter(Fields& f) {
  FilterSpec filter;
  const auto kind = f.enumeration<FilterKind>(
      "kind", [](std::string_view s) { return filter_kind_from_string(s); }, filter_kind_choices(),
      true);
  if (!kind) return filter;
  filter.kind = *kind;

  if (uses(filter.kind, "colour")) {
    if (auto c = f.string("colour", true)) {
      filter.colour = *c;
      check_colour(f, f.at("colour"), *c);
    }
  }
  if (uses(filter.kind, "stops")) {
    if (const json* s = f.array("stops")) filter.stops = read_stops(f, *s, f.at("stops"));
    if (filter.stops.size() < 2) f.fail(f.at("stops"), "a gradient needs at least two stops");
  }
  if (uses(filter.kind, "angle"))
    if (auto a = f.number("angle")) filter.angle_deg = *a;
  if (uses(filter.kind, "width"))
    if (auto w = f.number("width")) {
      if (*w <= 0) f.fail(f.at("width"), "width must be > 0");
      filter.width = *w;
    }
  if (uses(filter.kind, "alpha"))
    if (auto a = f.number("alpha", true)) {
      if (*a < 0 || *a > 1) f.fail(f.at("alpha"), "alpha must lie in [0, 1]");
      filter.alpha = *a;
    }
  if (uses(filter.kind, "threshold"))
    if (auto t = f.number("threshold")) {
      if (*t <= 0) f.fail(f.at("threshold"), "threshold must be > 0");
      filter.threshold = *t;
    }
  if (uses(filter.kind, "grid"))
    if (auto g = f.integer("grid")) {
      if (*g < 16 || *g > 1024) f.fail(f.at("grid"), "grid must lie in [16, 1024]");
      else filter.grid = static_cast<int>(*g);
    }
  if (uses(filter.kind, "radius"))
    if (auto r = f.number("radius", true)) {
      if (*r < 0) f.fail(f.at("radius"), "radius must be >= 0");
      filter.radius = *r;
    }
  if (uses(filter.kind, "iterations"))
    if (auto n = f.integer("iterations")) {
      if (*n < 0 || *n > 8) f.fail(f.at("iterations"), "iterations must lie in [0, 8]");
      else filter.iterations = static_cast<int>(*n);
    }
  if (uses(filter.kind, "amount"))
    if (auto a = f.number("amount")) {
      if (*a <= 0) f.fail(f.at("amount"), "amount must be > 0");
      filter.amount = *a;
    }
  return filter;
}

MappingSpec read_mapping(Fields& f) {
  MappingSpec m;
  const std::string channels = choices({Channel::mark_height, Channel::mark_width,
                                        Channel::mark_position, Channel::vertex_position,
                                        Channel::colour, Channel::angle, Channel::text,
                                        Channel::filter_param});
  const std::string sources = choices(
      {Source::value, Source::value_over_range, Source::name, Source::index, Source::constant});
  const auto channel = f.enumeration<Channel>(
      "channel", [](std::string_view s) { return channel_from_string(s); }, channels, true);
  const auto source = f.enumeration<Source>(
      "source", [](std::string_view s) { return source_from_string(s); }, sources, true);
  if (channel) m.channel = *channel;
  if (source) m.source = *source;

  if (auto c = f.number("constant")) {
    m.constant = *c;
    if (source && *source != Source::constant)
      f.fail(f.at("constant"), "constant is only read by the constant source");
  } else if (source && *source == Source::constant && !f.find("constant")) {
    f.fail(f.at("constant"), "missing field");
  }

  if (const json* p = f.array("palette")) {
    for (std::size_t i = 0; i < p->size(); ++i) {
      const std::string pp = indexed(f.at("palette"), i);
      if (!(*p)[i].is_string()) {
        f.fail(pp, "must be a colour string");
        continue;
      }
      m.palette.push_back((*p)[i].get<std::string>());
      check_colour(f, pp, m.palette.back());
    }
  }
  if (const json* g = f.array("gradient")) {
    m.gradient = read_stops(f, *g, f.at("gradient"));
    if (m.gradient.size() < 2) f.fail(f.at("gradient"), "a gradient needs at least two stops");
  }

  if (channel) {
    const bool colour = *channel == Channel::colour;
    if (!colour && !m.palette.empty())
      f.fail(f.at("palette"), "palette only applies to the colour channel");
    if (!colour && !m.gradient.empty())
      f.fail(f.at("gradient"), "gradient only applies to the colour channel");
    if (colour && m.palette.empty() && m.gradient.empty())
      f.fail(f.at("palette"), "colour mapping needs a palette or a gradient");
    if (!m.palette.empty() && !m.gradient.empty())
      f.fail(f.at("gradient"), "give either a palette or a gradient, not both");
    if (source && *source == Source::name && *channel != Channel::text && !colour)
      f.fail(f.at("source"), "name source only maps to text or colour channels");
  }
  return m;
}

struct Reader {
  std::vector<SchemaIssue> issues;
  Gene gene;

  void read(const json& doc) {
    Fields root(doc, "", issues);

    if (auto v = root.integer("geneVersion", true)) {
      if (*v != kGeneVersion)
        root.fail("geneVersion", "unsupported gene version " + std::to_string(*v) +
                                     "; this engine reads version " + std::to_string(kGeneVersion));
    }
    if (auto n = root.string("name", true)) {
      if (n->empty()) root.fail("name", "name must not be empty");
      gene.name = *n;
    }

    if (const json* p = object_field(root, "path", true)) read_path(*p);
    read_envelope(object_field(root, "envelope", false));
    if (const json* o = object_field(root, "object", true)) read_object(*o);

    if (const json* arr = root.array("mappings")) {
      for (std::size_t i = 0; i < arr->size(); ++i) {
        const std::string p = indexed("mappings", i);
        if (!(*arr)[i].is_object()) {
          root.fail(p, "must be an object");
          continue;
        }
        Fields m((*arr)[i], p, issues);
        gene.mappings.push_back(read_mapping(m));
        m.finish();
      }
    }
    if (const json* arr = root.array("filters")) {
      for (std::size_t i = 0; i < arr->size(); ++i) {
        const std::string p = indexed("filters", i);
        if (!(*arr)[i].is_object()) {
          root.fail(p, "must be an object");
          continue;
        }
        Fields fl((*arr)[i], p, issues);
        gene.filters.push_back(read_filter(fl));
        fl.finish();
      }
    }
    if (auto g = root.integer("grouping")) {
      if (*g < 1) root.fail("grouping", "grouping must be >= 1");
      else gene.grouping = static_cast<std::size_t>(*g);
    }
    root.finish();

    cross_checks();
  }

  void read_path(const json& obj) {
    Fields f(obj, "path", issues);
    PathSpec& spec = gene.path;
    if (auto m = f.enumeration<PathMode>(
            "mode", [](std::string_view s) { return path_mode_from_string(s); },
            path_mode_choices(), true))
      spec.mode = *m;
    if (auto n = f.integer("pointCount")) {
      if (*n < 1 || *n > 1'000'000) f.fail(f.at("pointCount"), "pointCount must lie in [1, 1000000]");
      else spec.point_count = static_cast<std::size_t>(*n);
    }
    if (auto r = f.number("rotation")) spec.rotation_deg = *r;
    if (auto d = f.number("pointDistance")) {
      if (*d <= 0 || *d > 1) f.fail(f.at("pointDistance"), "pointDistance must lie in (0, 1]");
      spec.point_distance = *d;
    }
    if (auto o = f.integer("order")) {
      if (*o < 1 || *o > 10) f.fail(f.at("order"), "order must lie in [1, 10]");
      else spec.order = static_cast<int>(*o);
    }
    if (const json* j = f.array("jumps")) {
      for (std::size_t i = 0; i < j->size(); ++i) {
        const json& v = (*j)[i];
        if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
          f.fail(indexed(f.at("jumps"), i), "must be a non-negative edge index");
          continue;
        }
        spec.jumps.push_back(v.get<std::size_t>());
      }
    }
    if (const json* pts = f.array("points")) {
      for (std::size_t i = 0; i < pts->size(); ++i) {
        const json& v = (*pts)[i];
        if (v.is_null()) {
          spec.user_points.push_back(std::nullopt);
          continue;
        }
        spec.user_points.push_back(f.point(v, indexed(f.at("points"), i)));
      }
    }
    gene.path_from_data = f.enumeration<ScatterMode>(
        "fromData", scatter_mode_from_string, "scatter_x_axis, scatter_data_order");
    f.finish();
  }

  void read_envelope(const json* obj) {
    EnvelopeSpec& env = gene.envelope;
    env = default_envelope_for(to_string(gene.path.mode));
    if (!obj) return;
    Fields f(*obj, "envelope", issues);
    if (auto t = f.number("top")) env.top_extent = *t;
    if (auto b = f.number("bottom")) env.bottom_extent = *b;
    if (auto m = f.enumeration<EnvelopeMode>(
            "mode", [](std::string_view s) { return envelope_mode_from_string(s); },
            choices({EnvelopeMode::parallel, EnvelopeMode::fixed_point})))
      env.mode = *m;
    env.fixed_point = f.point("fixedPoint");
    if (auto c = f.enumeration<Chain>(
            "fixedChain", [](std::string_view s) { return chain_from_string(s); },
            choices({Chain::top, Chain::bottom})))
      env.fixed_chain = *c;
    const std::string sides = choices({SidePolicy::center, SidePolicy::top_only,
                                       SidePolicy::bottom_only, SidePolicy::alternate,
                                       SidePolicy::per_edge});
    if (auto s = f.enumeration<SidePolicy>(
            "side", [](std::string_view s) { return side_policy_from_string(s); }, sides))
      env.side = *s;
    const std::string aligns =
        choices({Alignment::on_path_above, Alignment::on_path_below, Alignment::centered});
    if (const json* pe = f.array("perEdge")) {
      for (std::size_t i = 0; i < pe->size(); ++i) {
        const std::string p = indexed(f.at("perEdge"), i);
        const json& v = (*pe)[i];
        const auto a = v.is_string() ? alignment_from_string(v.get<std::string>()) : std::nullopt;
        if (!a) {
          f.fail(p, "expected one of " + aligns);
          continue;
        }
        env.per_edge.push_back(*a);
      }
    }
    if (auto s = f.boolean("switchOnTurn")) env.switch_on_turn = *s;
    if (auto c = f.boolean("collapse")) env.collapse = *c;
    f.finish();

    if (env.top_extent < 0) issues.push_back({"envelope.top", "extent must be >= 0"});
    if (env.bottom_extent < 0) issues.push_back({"envelope.bottom", "extent must be >= 0"});
    if (env.top_extent + env.bottom_extent <= 0 && !env.collapse)
      issues.push_back({"envelope.top", "extents sum to zero; set collapse to allow it"});
    if (env.mode == EnvelopeMode::fixed_point && !env.fixed_point)
      issues.push_back({"envelope.fixedPoint", "fixed_point mode requires a fixed point"});
    if (env.mode != EnvelopeMode::fixed_point && env.fixed_point)
      issues.push_back({"envelope.fixedPoint", "only used in fixed_point mode"});
    if (env.side == SidePolicy::per_edge && env.per_edge.empty())
      issues.push_back({"envelope.perEdge", "per_edge side policy needs a list of alignments"});
    if (env.side != SidePolicy::per_edge && !env.per_edge.empty())
      issues.push_back({"envelope.perEdge", "only used with the per_edge side policy"});
  }

  void read_object(const json& obj) {
    Fields f(obj, "object", issues);
    MarkSpec& m = gene.mark;
    if (auto s = f.enumeration<Shape>(
            "shape", [](std::string_view s) { return shape_from_string(s); },
            choices({Shape::rect, Shape::circle, Shape::ellipse, Shape::triangle, Shape::arc,
                     Shape::line, Shape::donut_segment, Shape::text}),
            true))
      m.shape = *s;
    if (auto g = f.number("gap")) {
      if (*g < 0 || *g >= 1) f.fail(f.at("gap"), "gap must lie in [0, 1)");
      m.gap = *g;
    }
    if (auto r = f.number("radius")) {
      if (*r <= 0) f.fail(f.at("radius"), "radius must be > 0");
      m.radius = *r;
    }
    if (auto s = f.boolean("stacking")) m.stacking = *s;
    m.anchor = f.enumeration<Alignment>(
        "anchor", [](std::string_view s) { return alignment_from_string(s); },
        choices({Alignment::on_path_above, Alignment::on_path_below, Alignment::centered}));
    m.star_anchor = f.point("starAnchor");
    if (auto r = f.boolean("radial")) m.radial = *r;
    if (auto w = f.number("ringWidth")) {
      if (*w <= 0 || *w > 1) f.fail(f.at("ringWidth"), "ringWidth must lie in (0, 1]");
      m.ring_width = *w;
    }
    if (auto c = f.string("colour")) {
      check_colour(f, f.at("colour"), *c);
      m.colour = *c;
    }
    f.finish();
  }

  void cross_checks() {
    const PathSpec& path = gene.path;
    const bool user = path.mode == PathMode::user_points;

    if (user && !gene.path_from_data &&
        std::none_of(path.user_points.begin(), path.user_points.end(),
                     [](const auto& p) { return p.has_value(); }))
      issues.push_back({"path.points", "user_points mode needs at least one point"});
    if (!user && !path.user_points.empty())
      issues.push_back({"path.points", "points are only read in user_points mode"});
    if (path.order && !is_space_filling(path.mode))
      issues.push_back({"path.order", "order only applies to space-filling modes"});

    std::optional<std::size_t> vertices;
    try {
      vertices = resolved_point_count(path);
    } catch (const Error& e) {
      issues.push_back({path.order ? "path.order" : "path.pointCount", e.what()});
    }
    if (vertices && !gene.path_from_data) {
      const std::size_t edges = *vertices > 0 ? *vertices - 1 : 0;
      for (std::size_t i = 0; i < path.jumps.size(); ++i)
        if (path.jumps[i] >= edges)
          issues.push_back({indexed("path.jumps", i),
                            "edge index " + std::to_string(path.jumps[i]) +
                                " out of range; the path has " + std::to_string(edges) +
                                " edges"});
    }

    const Shape shape = gene.mark.shape;
    const bool closed_user =
        user && path.user_points.size() >= 3 && path.user_points.front() &&
        path.user_points.back() && *path.user_points.front() == *path.user_points.back();
    if (shape == Shape::donut_segment && path.mode != PathMode::ring && !closed_user &&
        !gene.mark.radial)
      issues.push_back({"object.shape",
                        "donut_segment needs a ring path, a closed user path or radial placement"});
    if (shape == Shape::text && !gene.mapping(Channel::text))
      issues.push_back({"object.shape", "text marks need a text mapping"});
    for (std::size_t i = 0; i < gene.mappings.size(); ++i) {
      const MappingSpec& m = gene.mappings[i];
      if (m.channel == Channel::vertex_position && !gene.path_from_data)
        issues.push_back({indexed("mappings", i) + ".channel",
                          "vertex_position needs path.fromData"});
    }
  }
};

json point_json(Point p) { return json::array({p.x, p.y}); }

json stops_json(const std::vector<StopSpec>& stops) {
  json out = json::array();
  for (const auto& s : stops) out.push_back(json{{"offset", s.offset}, {"colour", s.colour}});
  return out;
}

json filter_json(const FilterSpec& f) {
  json out{{"kind", to_string(f.kind)}};
  if (uses(f.kind, "colour")) out["colour"] = f.colour;
  if (uses(f.kind, "stops")) out["stops"] = stops_json(f.stops);
  if (uses(f.kind, "angle")) out["angle"] = f.angle_deg;
  if (uses(f.kind, "width")) out["width"] = f.width;
  if (uses(f.kind, "alpha")) out["alpha"] = f.alpha;
  if (uses(f.kind, "threshold")) out["threshold"] = f.threshold;
  if (uses(f.kind, "grid")) out["grid"] = f.grid;
  if (uses(f.kind, "radius")) out["radius"] = f.radius;
  if (uses(f.kind, "iterations")) out["iterations"] = f.iterations;
  if (uses(f.kind, "amount")) out["amount"] = f.amount;
  return out;
}

}  // namespace

const MappingSpec* Gene::mapping(Channel channel) const {
  for (const auto& m : mappings)
    if (m.channel == channel) return &m;
  return nullptr;
}

std::vector<SchemaIssue> validate_gene(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    return {{"", std::string("malformed document: ") + e.what()}};
  }
  if (!doc.is_object()) return {{"", "document must be an object"}};
  Reader reader;
  try {
    reader.read(doc);
  } catch (const json::exception& e) {
    reader.issues.push_back({"", std::string("malformed document: ") + e.what()});
  }
  return reader.issues;
}

Gene parse_gene(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw SchemaError("", std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("", "document must be an object");
  Reader reader;
  try {
    reader.read(doc);
  } catch (const json::exception& e) {
    reader.issues.push_back({"", std::string("malformed document: ") + e.what()});
  }
  if (!reader.issues.empty()) throw SchemaError(std::move(reader.issues));
  return std::move(reader.gene);
}

std::string serialize_gene(const Gene& gene) {
  // nlohmann::json objects are std::map backed, so keys come out sorted.
  json doc;
  doc["geneVersion"] = gene.gene_version;
  doc["name"] = gene.name;

  const PathSpec& p = gene.path;
  json path{{"mode", to_string(p.mode)},
            {"pointCount", p.point_count},
            {"rotation", p.rotation_deg}};
  if (p.point_distance) path["pointDistance"] = *p.point_distance;
  if (p.order) path["order"] = *p.order;
  if (!p.jumps.empty()) path["jumps"] = p.jumps;
  if (!p.user_points.empty()) {
    json pts = json::array();
    for (const auto& pt : p.user_points) pts.push_back(pt ? point_json(*pt) : json(nullptr));
    path["points"] = std::move(pts);
  }
  if (gene.path_from_data) path["fromData"] = to_string(*gene.path_from_data);
  doc["path"] = std::move(path);

  const EnvelopeSpec& e = gene.envelope;
  json env{{"top", e.top_extent},
           {"bottom", e.bottom_extent},
           {"mode", to_string(e.mode)},
           {"fixedChain", to_string(e.fixed_chain)},
           {"side", to_string(e.side)},
           {"switchOnTurn", e.switch_on_turn},
           {"collapse", e.collapse}};
  if (e.fixed_point) env["fixedPoint"] = point_json(*e.fixed_point);
  if (!e.per_edge.empty()) {
    json pe = json::array();
    for (Alignment a : e.per_edge) pe.push_back(to_string(a));
    env["perEdge"] = std::move(pe);
  }
  doc["envelope"] = std::move(env);

  const MarkSpec& m = gene.mark;
  json obj{{"shape", to_string(m.shape)},
           {"gap", m.gap},
           {"stacking", m.stacking},
           {"radial", m.radial},
           {"ringWidth", m.ring_width}};
  if (m.radius) obj["radius"] = *m.radius;
  if (m.anchor) obj["anchor"] = to_string(*m.anchor);
  if (m.star_anchor) obj["starAnchor"] = point_json(*m.star_anchor);
  if (m.colour) obj["colour"] = *m.colour;
  doc["object"] = std::move(obj);

  json mappings = json::array();
  for (const auto& mp : gene.mappings) {
    json j{{"channel", to_string(mp.channel)}, {"source", to_string(mp.source)}};
    if (mp.source == Source::constant) j["constant"] = mp.constant;
    if (!mp.palette.empty()) j["palette"] = mp.palette;
    if (!mp.gradient.empty()) j["gradient"] = stops_json(mp.gradient);
    mappings.push_back(std::move(j));
  }
  doc["mappings"] = std::move(mappings);

  json filters = json::array();
  for (const auto& f : gene.filters) filters.push_back(filter_json(f));
  doc["filters"] = std::move(filters);
  doc["grouping"] = gene.grouping;

  return doc.dump(2) + "\n";
}

}  // namespace genii
