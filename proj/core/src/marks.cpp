#include "genii/marks.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "genii/errors.hpp"
#include "genii/polygon_ops.hpp"

namespace genii {
namespace {

constexpr std::array<std::pair<Shape, std::string_view>, 8> kShapes{{
    {Shape::rect, "rect"},
    {Shape::circle, "circle"},
    {Shape::ellipse, "ellipse"},
    {Shape::triangle, "triangle"},
    {Shape::arc, "arc"},
    {Shape::line, "line"},
    {Shape::donut_segment, "donut_segment"},
    {Shape::text, "text"},
}};

constexpr int kCircleSegments = 48;
constexpr int kArcSamples = 24;
constexpr double kMaxArcStepDeg = 3.0;

Point polar_clockwise(Point center, double radius, double deg) {
  const double rad = deg * std::numbers::pi / 180.0;
  return {center.x + radius * std::sin(rad), center.y + radius * std::cos(rad)};
}

// Point on the edge at parameter t, lifted s times the interpolated reach.
Point frame_point(const EdgeFrame& f, double t, double s) {
  return lerp(f.base_a, f.base_b, t) + lerp(f.reach_a, f.reach_b, t) * s;
}

bool is_closed(const FlowPath& path) {
  return path.size() > 2 && path.vertex(0) == path.vertex(path.size() - 1);
}

struct SRange {
  double lo;
  double hi;
};

SRange s_range(const EdgeFrame& f, const Datum& d) {
  if (f.alignment == Alignment::centered)
    return {d.start - d.height / 2.0, d.start + d.height / 2.0};
  return {d.start, d.start + d.height};
}

Region finish_region(Ring ring) { return polygon::make_valid(polygon::from_ring(std::move(ring))); }

}  // namespace

std::string_view to_string(Shape s) {
  for (const auto& [v, name] : kShapes)
    if (v == s) return name;
  return "unknown";
}

std::optional<Shape> shape_from_string(std::string_view s) {
  for (const auto& [v, name] : kShapes)
    if (name == s) return v;
  return std::nullopt;
}

Region annular_sector(Point center, double inner, double outer, AngularSpan span) {
  const double sweep = span.sweep();
  if (outer <= 0.0 || sweep <= 0.0) return {};
  if (sweep >= 360.0 - 1e-9) {
    Polygon ring{circle_ring(center, outer, 120), {}};
    if (inner > 0.0) {
      Ring hole = circle_ring(center, inner, 120);
      std::reverse(hole.begin(), hole.end());
      ring.holes.push_back(std::move(hole));
    }
    return Region{std::move(ring)};
  }
  const int steps = std::max(2, static_cast<int>(std::ceil(sweep / kMaxArcStepDeg)));
  Ring ring;
  for (int i = 0; i <= steps; ++i)
    ring.push_back(polar_clockwise(center, outer, span.start_deg + sweep * i / steps));
  if (inner > 0.0) {
    for (int i = steps; i >= 0; --i)
      ring.push_back(polar_clockwise(center, inner, span.start_deg + sweep * i / steps));
  } else {
    ring.push_back(center);
  }
  return finish_region(std::move(ring));
}

double scale_height(double value, double range, double extent, std::vector<std::string>* warnings) {
  if (!(range > 0.0)) throw Error(ErrorCode::ZeroRange, "range must be > 0");
  if (value < 0.0 || value > range) {
    if (warnings)
      warnings->push_back("value " + std::to_string(value) + " outside [0, " +
                          std::to_string(range) + "], clamped");
    value = std::clamp(value, 0.0, range);
  }
  return extent * value / range;
}

std::vector<StackInterval> stack_offsets(const std::vector<double>& values, double range,
                                         std::vector<std::string>* warnings) {
  if (!(range > 0.0)) throw Error(ErrorCode::ZeroRange, "range must be > 0");
  std::vector<StackInterval> out;
  out.reserve(values.size());
  double total = 0.0;
  bool clamped = false;
  for (double v : values) {
    const double start = std::min(total / range, 1.0);
    total += v;
    double end = total / range;
    if (end > 1.0) {
      end = 1.0;
      clamped = true;
    }
    out.push_back({start, end});
  }
  if (clamped && warnings) warnings->push_back("stacked values exceed range; final segment clamped");
  return out;
}

std::vector<AngularSpan> donut_segments(const std::vector<double>& values, double range) {
  if (!(range > 0.0)) throw Error(ErrorCode::ZeroRange, "range must be > 0");
  std::vector<AngularSpan> out;
  out.reserve(values.size());
  double total = 0.0;
  for (double v : values) {
    const double start = 360.0 * total / range;
    total += std::max(v, 0.0);
    out.push_back({std::min(start, 360.0), std::min(360.0 * total / range, 360.0)});
  }
  return out;
}

ScatterResult scatter_place(const std::vector<Point>& points, ScatterStrategy strategy,
                            double radius) {
  std::vector<Point> vertices;
  vertices.reserve(points.size());
  for (const auto& p : points)
    vertices.push_back(strategy == ScatterStrategy::vertical_from_axis ? Point{p.x, 0.0} : p);
  ScatterResult result{FlowPath(std::move(vertices)), {}};
  for (std::size_t i = 0; i < points.size(); ++i) {
    MarkGeometry m;
    m.shape = Shape::circle;
    m.circle = Circle{points[i], radius};
    m.area = finish_region(circle_ring(points[i], radius, kCircleSegments));
    m.placed_bounds = bounds(m.area);
    m.placed_height = 2 * radius;
    m.edge_index = i;
    m.datum_index = i;
    m.z_order = i;
    result.marks.push_back(std::move(m));
  }
  return result;
}

Placement place_marks(const FlowPath& path, const Envelope& envelope, const MarkSpec& spec,
                      const std::vector<Datum>& data, std::size_t grouping) {
  Placement out;
  if (grouping == 0) grouping = 1;
  const std::vector<std::size_t> draw = path.draw_edges();
  const bool donut_on_ring = spec.shape == Shape::donut_segment && !spec.radial;
  if (donut_on_ring && !is_closed(path))
    throw Error(ErrorCode::ShapeUnsupportedOnPath,
                "donut_segment needs a closed path (ring) or radial placement");

  const auto frame_for = [&](std::size_t edge) {
    const Alignment a = spec.anchor ? *spec.anchor : alignment_for_edge(envelope, edge);
    EdgeFrame f = baseline_for_edge(envelope, path, edge, a);
    if (spec.star_anchor) {
      f.reach_a = *spec.star_anchor - f.base_a;
      f.reach_b = *spec.star_anchor - f.base_b;
    }
    return f;
  };

  if (donut_on_ring) {
    // The whole ring carries one donut; each datum takes an angular share.
    std::vector<Point> unique(path.vertices().begin(), path.vertices().end() - 1);
    Point center{0, 0};
    for (const auto& v : unique) center += v;
    center = center / static_cast<double>(unique.size());
    const std::size_t first = *std::find_if(draw.begin(), draw.end(), [&](std::size_t e) {
      return !path.edge(e).degenerate;
    });
    const EdgeFrame f = frame_for(first);
    const double lo = f.alignment == Alignment::centered ? -0.5 : 0.0;
    const double r1 = distance(center, f.base_a + f.reach_a * lo);
    const double r2 = distance(center, f.base_a + f.reach_a * (lo + 1.0));
    double cursor = 0.0;
    for (std::size_t k = 0; k < data.size(); ++k) {
      const Datum& d = data[k];
      const AngularSpan span{cursor, std::min(cursor + 360.0 * d.value_fraction, 360.0)};
      cursor = span.end_deg;
      MarkGeometry m;
      m.shape = Shape::donut_segment;
      m.span = span;
      m.area = annular_sector(center, std::min(r1, r2), std::max(r1, r2), span);
      m.placed_bounds = bounds(m.area);
      m.placed_height = std::abs(r2 - r1);
      m.edge_index = k < draw.size() ? draw[k] : draw.back();
      m.datum_index = d.index;
      m.group = k / grouping;
      m.z_order = out.marks.size();
      m.style.fill = d.colour;
      m.area = clip_to_envelope(m.area, envelope);
      out.marks.push_back(std::move(m));
    }
    return out;
  }

  std::size_t next_slot = 0;
  bool warned = false;
  for (const Datum& d : data) {
    const std::size_t slot = d.slot.value_or(next_slot);
    next_slot = slot + 1;
    if (slot >= draw.size()) {
      if (!warned) {
        out.warnings.push_back("data longer than the path's draw edges; extra data ignored");
        warned = true;
      }
      continue;
    }
    const std::size_t edge = draw[slot];
    if (path.edge(edge).degenerate) continue;

    const EdgeFrame f = frame_for(edge);
    const double half = std::clamp((1.0 - spec.gap) * d.width, 0.0, 1.0) / 2.0;
    const double t0 = 0.5 - half;
    const double t1 = 0.5 + half;
    const auto [s0, s1] = s_range(f, d);
    const double reach_len = length(f.mid_reach());

    MarkGeometry m;
    m.shape = spec.shape;
    m.edge_index = edge;
    m.datum_index = d.index;
    m.group = slot / grouping;
    m.style.fill = d.colour;
    m.placed_height = std::abs(s1 - s0) * reach_len;

    switch (spec.shape) {
      case Shape::rect:
        m.area = finish_region({frame_point(f, t0, s0), frame_point(f, t1, s0),
                                frame_point(f, t1, s1), frame_point(f, t0, s1)});
        m.placed_bounds = bounds(std::vector<Point>{frame_point(f, t0, s0), frame_point(f, t1, s0),
                                                    frame_point(f, t1, s1), frame_point(f, t0, s1)});
        break;
      case Shape::triangle: {
        const std::vector<Point> tri{frame_point(f, t0, s0), frame_point(f, t1, s0),
                                     frame_point(f, 0.5, s1)};
        m.placed_bounds = bounds(tri);
        m.area = finish_region(tri);
        break;
      }
      case Shape::arc: {
        // Quadratic Bezier between the mark's base corners; the control point
        // is the edge midpoint lifted by the datum height.
        const Point p0 = frame_point(f, t0, s0);
        const Point p2 = frame_point(f, t1, s0);
        const Point c = frame_point(f, 0.5, s1);
        Ring ring;
        for (int i = 0; i <= kArcSamples; ++i) {
          const double u = static_cast<double>(i) / kArcSamples;
          ring.push_back(p0 * ((1 - u) * (1 - u)) + c * (2 * u * (1 - u)) + p2 * (u * u));
        }
        m.placed_bounds = bounds(ring);
        m.area = finish_region(std::move(ring));
        break;
      }
      case Shape::line: {
        Ring line{frame_point(f, t0, s1), frame_point(f, t1, s1)};
        m.placed_bounds = bounds(line);
        m.lines.push_back(std::move(line));
        break;
      }
      case Shape::circle: {
        const double half_len = f.length() / 2.0;
        const double r = d.radius ? *d.radius * half_len : spec.radius.value_or(half_len);
        const Point reach_dir = reach_len > 0 ? f.mid_reach() / reach_len : f.normal;
        Point center = f.midpoint();
        if (d.position) {
          center = frame_point(f, 0.5, *d.position);
        } else if (f.alignment != Alignment::centered) {
          center = center + reach_dir * r;
        }
        m.circle = Circle{center, r};
        const Ring ring = circle_ring(center, r, kCircleSegments);
        m.placed_bounds = bounds(ring);
        m.placed_height = 2 * r;
        m.area = finish_region(ring);
        break;
      }
      case Shape::ellipse: {
        const double rx = (t1 - t0) * f.length() / 2.0;
        const double ry = std::abs(s1 - s0) * reach_len / 2.0;
        const Point center = frame_point(f, 0.5, (s0 + s1) / 2.0);
        const Ring ring = ry > 0 ? ellipse_ring(center, rx, ry, f.direction(), kCircleSegments)
                                 : Ring{};
        m.placed_bounds = ry > 0 ? bounds(ring) : bounds(std::vector<Point>{center});
        m.area = ry > 0 ? finish_region(ring) : Region{};
        break;
      }
      case Shape::donut_segment: {
        // Radial bar: a ring centred on the edge midpoint filled clockwise
        // from 12 o'clock by the datum's share of its range.
        const double outer = (t1 - t0) * f.length() / 2.0;
        const double inner = outer * (1.0 - std::clamp(spec.ring_width, 0.0, 1.0));
        const AngularSpan span{0.0, 360.0 * std::clamp(d.value_fraction, 0.0, 1.0)};
        m.span = span;
        m.area = annular_sector(f.midpoint(), inner, outer, span);
        m.placed_bounds = bounds(circle_ring(f.midpoint(), outer, kCircleSegments));
        m.placed_height = outer - inner;
        break;
      }
      case Shape::text: {
        const Point anchor = frame_point(f, 0.5, (s0 + s1) / 2.0);
        m.text = TextMark{anchor, 0.8 * reach_len, d.text};
        m.placed_bounds = bounds(std::vector<Point>{anchor});
        break;
      }
    }

    if (!m.area.empty()) m.area = clip_to_envelope(m.area, envelope);
    if (!m.lines.empty()) m.lines = clip_to_envelope(m.lines, envelope);
    m.z_order = out.marks.size();
    out.marks.push_back(std::move(m));
  }
  return out;
}

}  // namespace genii
