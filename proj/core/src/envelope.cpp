#include "genii/envelope.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "genii/errors.hpp"
#include "genii/polygon_ops.hpp"

namespace genii {
namespace {

constexpr double kMiterLimit = 2.0;

template <typename E, std::size_t N>
std::optional<E> lookup(const std::array<std::pair<E, std::string_view>, N>& table,
                        std::string_view s) {
  for (const auto& [v, name] : table)
    if (name == s) return v;
  return std::nullopt;
}

template <typename E, std::size_t N>
std::string_view name_of(const std::array<std::pair<E, std::string_view>, N>& table, E v) {
  for (const auto& [e, name] : table)
    if (e == v) return name;
  return "unknown";
}

constexpr std::array<std::pair<EnvelopeMode, std::string_view>, 2> kModes{{
    {EnvelopeMode::parallel, "parallel"},
    {EnvelopeMode::fixed_point, "fixed_point"},
}};
constexpr std::array<std::pair<SidePolicy, std::string_view>, 5> kSides{{
    {SidePolicy::center, "center"},
    {SidePolicy::top_only, "top_only"},
    {SidePolicy::bottom_only, "bottom_only"},
    {SidePolicy::alternate, "alternate"},
    {SidePolicy::per_edge, "per_edge"},
}};
constexpr std::array<std::pair<Alignment, std::string_view>, 3> kAlignments{{
    {Alignment::on_path_above, "on_path_above"},
    {Alignment::on_path_below, "on_path_below"},
    {Alignment::centered, "centered"},
}};
constexpr std::array<std::pair<Chain, std::string_view>, 2> kChains{{
    {Chain::top, "top"},
    {Chain::bottom, "bottom"},
}};

bool usable(const FlowPath& path, std::size_t e) {
  const Edge& edge = path.edge(e);
  return !edge.is_jump() && !edge.degenerate;
}

struct VertexOffset {
  Point normal;
  double miter = 1.0;
};

std::vector<VertexOffset> vertex_offsets(const FlowPath& path, const std::vector<Point>& normals) {
  const std::size_t n = path.size();
  const std::size_t edge_count = path.edges().size();
  const bool closed = n > 2 && path.vertex(0) == path.vertex(n - 1);

  std::vector<std::size_t> good;
  for (std::size_t e = 0; e < edge_count; ++e)
    if (usable(path, e)) good.push_back(e);

  std::vector<VertexOffset> out(n, VertexOffset{{0.0, 1.0}, 1.0});
  if (good.empty()) return out;

  for (std::size_t i = 0; i < n; ++i) {
    std::optional<std::size_t> prev;
    std::optional<std::size_t> next;
    if (i > 0 && usable(path, i - 1)) prev = i - 1;
    else if (i == 0 && closed && usable(path, edge_count - 1)) prev = edge_count - 1;
    if (i < edge_count && usable(path, i)) next = i;
    else if (i == n - 1 && closed && usable(path, 0)) next = 0;

    if (prev && next) {
      const Point sum = normals[*prev] + normals[*next];
      const double len = length(sum);
      if (len < 1e-12) {
        out[i] = {normals[*next], 1.0};
      } else {
        const Point avg = sum / len;
        const double c = dot(avg, normals[*prev]);
        out[i] = {avg, std::min(1.0 / std::max(c, 1e-12), kMiterLimit)};
      }
    } else if (prev || next) {
      out[i] = {normals[prev ? *prev : *next], 1.0};
    } else {
      // Isolated vertex (between jumps or degenerate edges): borrow the
      // nearest usable edge.
      const auto nearest = std::min_element(good.begin(), good.end(), [&](auto a, auto b) {
        const auto da = a >= i ? a - i : i - a;
        const auto db = b >= i ? b - i : i - b;
        return da < db;
      });
      out[i] = {normals[*nearest], 1.0};
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(EnvelopeMode v) { return name_of(kModes, v); }
std::string_view to_string(SidePolicy v) { return name_of(kSides, v); }
std::string_view to_string(Alignment v) { return name_of(kAlignments, v); }
std::string_view to_string(Chain v) { return name_of(kChains, v); }
std::optional<EnvelopeMode> envelope_mode_from_string(std::string_view s) { return lookup(kModes, s); }
std::optional<SidePolicy> side_policy_from_string(std::string_view s) { return lookup(kSides, s); }
std::optional<Alignment> alignment_from_string(std::string_view s) { return lookup(kAlignments, s); }
std::optional<Chain> chain_from_string(std::string_view s) { return lookup(kChains, s); }

EnvelopeSpec default_envelope_for(std::string_view path_mode) {
  EnvelopeSpec spec;
  if (path_mode == "ring") {
    // Ring radius is 0.5; a band of a fifth of the radius on the inner side.
    spec.top_extent = 0.2 * 0.5;
    spec.bottom_extent = 0.0;
    spec.side = SidePolicy::top_only;
  } else if (path_mode == "disjoint_inline" || path_mode == "zigzag") {
    spec.top_extent = 0.2;
    spec.bottom_extent = 0.2;
  }
  return spec;
}

Envelope build_envelope(const FlowPath& path, const EnvelopeSpec& spec) {
  if (spec.mode == EnvelopeMode::fixed_point && !spec.fixed_point)
    throw SchemaError("envelope.fixedPoint", "fixed_point mode requires a fixed point");

  Envelope env;
  env.spec = spec;
  const std::size_t edge_count = path.edges().size();
  env.normals.assign(edge_count, Point{0.0, 0.0});

  bool any_draw = false;
  bool any_usable = false;
  for (std::size_t e = 0; e < edge_count; ++e) {
    const Edge& edge = path.edge(e);
    if (!edge.is_jump()) any_draw = true;
    if (!edge.degenerate) {
      env.normals[e] = edge_normal(path.edge_start(e), path.edge_end(e));
      if (!edge.is_jump()) any_usable = true;
    }
  }
  if (any_draw && !any_usable)
    throw Error(ErrorCode::DegeneratePath, "every draw edge of the path has zero length");

  const auto offsets = vertex_offsets(path, env.normals);
  env.top.reserve(path.size());
  env.bottom.reserve(path.size());
  for (std::size_t i = 0; i < path.size(); ++i) {
    const Point v = path.vertex(i);
    const Point off = offsets[i].normal * offsets[i].miter;
    env.top.push_back(v + off * spec.top_extent);
    env.bottom.push_back(v - off * spec.bottom_extent);
  }
  if (spec.mode == EnvelopeMode::fixed_point) {
    auto& chain = spec.fixed_chain == Chain::top ? env.top : env.bottom;
    std::fill(chain.begin(), chain.end(), *spec.fixed_point);
  }

  env.edge_regions.resize(edge_count);
  std::vector<Region> parts;
  for (std::size_t e = 0; e < edge_count; ++e) {
    if (!usable(path, e)) continue;
    const auto a = path.edge(e).from_index;
    const auto b = path.edge(e).to_index;
    const Region upper = polygon::make_valid(polygon::from_ring(
        {path.vertex(a), path.vertex(b), env.top[b], env.top[a]}));
    const Region lower = polygon::make_valid(polygon::from_ring(
        {path.vertex(a), path.vertex(b), env.bottom[b], env.bottom[a]}));
    env.edge_regions[e] = polygon::unite(upper, lower);
    parts.push_back(env.edge_regions[e]);
  }
  env.region = polygon::unite_all(parts);
  return env;
}

Alignment alignment_for_edge(const Envelope& envelope, std::size_t edge_index) {
  const EnvelopeSpec& spec = envelope.spec;
  Alignment a = Alignment::centered;
  switch (spec.side) {
    case SidePolicy::center: a = Alignment::centered; break;
    case SidePolicy::top_only: a = Alignment::on_path_above; break;
    case SidePolicy::bottom_only: a = Alignment::on_path_below; break;
    case SidePolicy::alternate:
      a = edge_index % 2 == 0 ? Alignment::on_path_above : Alignment::on_path_below;
      break;
    case SidePolicy::per_edge:
      a = spec.per_edge.empty() ? Alignment::on_path_above
                                : spec.per_edge[edge_index % spec.per_edge.size()];
      break;
  }
  if (spec.switch_on_turn && edge_index < envelope.normals.size() &&
      envelope.normals[edge_index].y < 0.0) {
    if (a == Alignment::on_path_above) a = Alignment::on_path_below;
    else if (a == Alignment::on_path_below) a = Alignment::on_path_above;
  }
  return a;
}

EdgeFrame baseline_for_edge(const Envelope& envelope, const FlowPath& path,
                            std::size_t edge_index, Alignment alignment) {
  const Edge& edge = path.edge(edge_index);
  if (edge.is_jump())
    throw Error(ErrorCode::JumpEdge, "edge " + std::to_string(edge_index) + " is a jump");
  if (edge.degenerate)
    throw Error(ErrorCode::DegenerateEdge,
                "edge " + std::to_string(edge_index) + " has zero length");

  EdgeFrame f;
  f.edge_index = edge_index;
  f.alignment = alignment;
  f.base_a = path.vertex(edge.from_index);
  f.base_b = path.vertex(edge.to_index);
  f.normal = envelope.normals[edge_index];
  const auto ia = edge.from_index;
  const auto ib = edge.to_index;
  switch (alignment) {
    case Alignment::on_path_above:
      f.reach_a = envelope.top[ia] - f.base_a;
      f.reach_b = envelope.top[ib] - f.base_b;
      break;
    case Alignment::on_path_below:
      f.reach_a = envelope.bottom[ia] - f.base_a;
      f.reach_b = envelope.bottom[ib] - f.base_b;
      break;
    case Alignment::centered:
      f.reach_a = envelope.top[ia] - envelope.bottom[ia];
      f.reach_b = envelope.top[ib] - envelope.bottom[ib];
      break;
  }
  const double extent = (length(f.reach_a) + length(f.reach_b)) / 2.0;
  f.signed_extent = alignment == Alignment::on_path_below ? -extent : extent;
  return f;
}

Region clip_to_envelope(const Region& geometry, const Envelope& envelope) {
  if (geometry.empty() || envelope.region.empty()) return {};
  return polygon::intersect(geometry, envelope.region);
}

std::vector<Ring> clip_to_envelope(const std::vector<Ring>& polylines, const Envelope& envelope) {
  if (envelope.region.empty()) return {};
  return polygon::clip_polylines(polylines, envelope.region);
}

}  // namespace genii
