#include "genii/filters.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "genii/errors.hpp"
#include "genii/polygon_ops.hpp"

namespace genii {
namespace {

constexpr std::array<std::pair<FilterKind, std::string_view>, 15> kKinds{{
    {FilterKind::solid_fill, "solid_fill"},
    {FilterKind::linear_gradient, "linear_gradient"},
    {FilterKind::radial_gradient, "radial_gradient"},
    {FilterKind::stroke, "stroke"},
    {FilterKind::opacity, "opacity"},
    {FilterKind::overlap, "overlap"},
    {FilterKind::cutout, "cutout"},
    {FilterKind::union_, "union"},
    {FilterKind::intersect, "intersect"},
    {FilterKind::subtract, "subtract"},
    {FilterKind::metaball, "metaball"},
    {FilterKind::round_corners, "round_corners"},
    {FilterKind::smooth, "smooth"},
    {FilterKind::blur, "blur"},
    {FilterKind::shadow, "shadow"},
}};

constexpr double kArcStep = std::numbers::pi / 64.0;

void require_polygonal(const std::vector<MarkGeometry>& marks) {
  for (const auto& m : marks)
    if (!m.lines.empty() || m.text)
      throw Error(ErrorCode::NonPolygonalInput,
                  "boolean combine needs closed shapes; mark on edge " +
                      std::to_string(m.edge_index) + " is open or text");
}

double shortest_side(const Ring& ring) {
  double best = INFINITY;
  for (std::size_t i = 0; i < ring.size(); ++i)
    best = std::min(best, distance(ring[i], ring[(i + 1) % ring.size()]));
  return best;
}

}  // namespace

std::string_view to_string(FilterKind kind) {
  for (const auto& [k, name] : kKinds)
    if (k == kind) return name;
  return "unknown";
}

std::optional<FilterKind> filter_kind_from_string(std::string_view s) {
  for (const auto& [k, name] : kKinds)
    if (name == s) return k;
  return std::nullopt;
}

bool is_combine(FilterKind kind) {
  switch (kind) {
    case FilterKind::overlap:
    case FilterKind::cutout:
    case FilterKind::union_:
    case FilterKind::intersect:
    case FilterKind::subtract:
      return true;
    default:
      return false;
  }
}

bool is_style(FilterKind kind) {
  switch (kind) {
    case FilterKind::solid_fill:
    case FilterKind::linear_gradient:
    case FilterKind::radial_gradient:
    case FilterKind::stroke:
    case FilterKind::opacity:
    case FilterKind::blur:
    case FilterKind::shadow:
      return true;
    default:
      return false;
  }
}

Gradient gradient_from_stops(const std::vector<StopSpec>& stops) {
  Gradient g;
  for (const auto& s : stops) g.stops.push_back({s.offset, parse_colour(s.colour)});
  return g;
}

std::vector<MarkGeometry> combine(const std::vector<MarkGeometry>& marks, CombineMode mode) {
  if (mode == CombineMode::overlap || marks.empty()) return marks;
  require_polygonal(marks);

  std::vector<MarkGeometry> ordered = marks;
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) { return a.z_order < b.z_order; });

  switch (mode) {
    case CombineMode::cutout: {
      // Walk backwards accumulating everything placed later.
      Region later;
      for (auto it = ordered.rbegin(); it != ordered.rend(); ++it) {
        const Region original = it->area;
        if (!later.empty()) it->area = polygon::subtract(original, later);
        later = later.empty() ? original : polygon::unite(later, original);
      }
      return ordered;
    }
    case CombineMode::union_: {
      std::vector<Region> parts;
      for (const auto& m : ordered) parts.push_back(m.area);
      MarkGeometry merged = ordered.front();
      merged.area = polygon::unite_all(parts);
      merged.circle.reset();
      merged.span.reset();
      for (const auto& m : ordered) {
        merged.placed_bounds.expand(m.placed_bounds.min);
        merged.placed_bounds.expand(m.placed_bounds.max);
      }
      return {merged};
    }
    case CombineMode::intersect: {
      MarkGeometry merged = ordered.front();
      for (std::size_t i = 1; i < ordered.size(); ++i)
        merged.area = polygon::intersect(merged.area, ordered[i].area);
      merged.circle.reset();
      merged.span.reset();
      return {merged};
    }
    case CombineMode::subtract: {
      MarkGeometry merged = ordered.front();
      std::vector<Region> rest;
      for (std::size_t i = 1; i < ordered.size(); ++i) rest.push_back(ordered[i].area);
      if (!rest.empty()) merged.area = polygon::subtract(merged.area, polygon::unite_all(rest));
      merged.circle.reset();
      merged.span.reset();
      return {merged};
    }
    case CombineMode::overlap:
      break;
  }
  return ordered;
}

std::vector<MarkGeometry> apply_style(std::vector<MarkGeometry> marks, const FilterSpec& filter) {
  switch (filter.kind) {
    case FilterKind::solid_fill: {
      const Colour c = parse_colour(filter.colour);
      for (auto& m : marks) m.style.fill = c;
      break;
    }
    case FilterKind::linear_gradient: {
      const LinearGradientPaint paint{gradient_from_stops(filter.stops), filter.angle_deg};
      for (auto& m : marks) m.style.fill = paint;
      break;
    }
    case FilterKind::radial_gradient: {
      const RadialGradientPaint paint{gradient_from_stops(filter.stops)};
      for (auto& m : marks) m.style.fill = paint;
      break;
    }
    case FilterKind::stroke: {
      const Colour c = parse_colour(filter.colour);
      for (auto& m : marks) {
        m.style.stroke = c;
        m.style.stroke_width = filter.width;
      }
      break;
    }
    case FilterKind::opacity:
      for (auto& m : marks) m.style.opacity = std::clamp(filter.alpha, 0.0, 1.0);
      break;
    case FilterKind::blur:
      for (auto& m : marks) m.style.effect = Effect{Effect::Kind::blur, filter.amount};
      break;
    case FilterKind::shadow:
      for (auto& m : marks) m.style.effect = Effect{Effect::Kind::shadow, filter.amount};
      break;
    default:
      break;
  }
  return marks;
}

Ring round_ring_corners(const Ring& ring, double radius) {
  const std::size_t n = ring.size();
  if (radius <= 0.0 || n < 3) return ring;
  Ring out;
  out.reserve(n * 8);
  for (std::size_t i = 0; i < n; ++i) {
    const Point p = ring[i];
    const Point a = ring[(i + n - 1) % n];
    const Point b = ring[(i + 1) % n];
    const double la = distance(p, a);
    const double lb = distance(p, b);
    if (la == 0.0 || lb == 0.0) {
      out.push_back(p);
      continue;
    }
    const Point u = (a - p) / la;
    const Point v = (b - p) / lb;
    const double theta = std::acos(std::clamp(dot(u, v), -1.0, 1.0));
    if (theta < 1e-9 || std::numbers::pi - theta < 1e-9) {
      out.push_back(p);
      continue;
    }
    // Tangent distance, limited so neighbouring fillets never overlap.
    double d = radius / std::tan(theta / 2.0);
    d = std::min({d, la / 2.0, lb / 2.0});
    const double r = d * std::tan(theta / 2.0);
    const Point bisector = (u + v) / length(u + v);
    const Point center = p + bisector * (r / std::sin(theta / 2.0));
    const Point t1 = p + u * d;
    const Point t2 = p + v * d;
    double a1 = std::atan2(t1.y - center.y, t1.x - center.x);
    double a2 = std::atan2(t2.y - center.y, t2.x - center.x);
    double sweep = a2 - a1;
    while (sweep > std::numbers::pi) sweep -= 2 * std::numbers::pi;
    while (sweep < -std::numbers::pi) sweep += 2 * std::numbers::pi;
    const int steps = std::max(2, static_cast<int>(std::ceil(std::abs(sweep) / kArcStep)));
    for (int k = 0; k <= steps; ++k) {
      const double ang = a1 + sweep * k / steps;
      out.push_back(center + Point{std::cos(ang), std::sin(ang)} * r);
    }
  }
  return out;
}

std::vector<MarkGeometry> round_corners(std::vector<MarkGeometry> marks, double radius) {
  if (radius <= 0.0) return marks;
  for (const auto& m : marks) {
    for (const auto& poly : m.area) {
      if (radius > shortest_side(poly.outer) / 2.0 + 1e-12)
        throw Error(ErrorCode::RadiusTooLarge,
                    "corner radius " + std::to_string(radius) +
                        " exceeds half the shortest side of the mark on edge " +
                        std::to_string(m.edge_index));
    }
  }
  for (auto& m : marks) {
    for (auto& poly : m.area) {
      poly.outer = round_ring_corners(poly.outer, radius);
      for (auto& h : poly.holes) h = round_ring_corners(h, radius);
    }
  }
  return marks;
}

Ring smooth_ring(const Ring& ring, int iterations, bool closed) {
  Ring cur = ring;
  for (int it = 0; it < iterations; ++it) {
    const std::size_t n = cur.size();
    if (n < 2) break;
    Ring next;
    next.reserve(n * 2);
    if (closed) {
      for (std::size_t i = 0; i < n; ++i) {
        const Point a = cur[i];
        const Point b = cur[(i + 1) % n];
        next.push_back(lerp(a, b, 0.25));
        next.push_back(lerp(a, b, 0.75));
      }
    } else {
      next.push_back(cur.front());
      for (std::size_t i = 0; i + 1 < n; ++i) {
        next.push_back(lerp(cur[i], cur[i + 1], 0.25));
        next.push_back(lerp(cur[i], cur[i + 1], 0.75));
      }
      next.push_back(cur.back());
    }
    cur = std::move(next);
  }
  return cur;
}

std::vector<MarkGeometry> smooth(std::vector<MarkGeometry> marks, int iterations) {
  if (iterations <= 0) return marks;
  for (auto& m : marks) {
    for (auto& poly : m.area) {
      poly.outer = smooth_ring(poly.outer, iterations);
      for (auto& h : poly.holes) h = smooth_ring(h, iterations);
    }
    for (auto& line : m.lines) line = smooth_ring(line, iterations, false);
  }
  return marks;
}

}  // namespace genii
