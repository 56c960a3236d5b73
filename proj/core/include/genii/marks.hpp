#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "genii/colour.hpp"
#include "genii/envelope.hpp"
#include "genii/geometry.hpp"
#include "genii/path.hpp"

namespace genii {

enum class Shape { rect, circle, ellipse, triangle, arc, line, donut_segment, text };

std::string_view to_string(Shape s);
std::optional<Shape> shape_from_string(std::string_view s);

struct MarkSpec {
  Shape shape = Shape::rect;
  // Fraction of the edge length left empty between neighbouring marks.
  double gap = 0.05;
  // Constant circle/ellipse radius in unit space; used when no datum
  // channel sizes the mark.
  std::optional<double> radius;
  bool stacking = false;
  // Overrides the envelope side policy for every edge.
  std::optional<Alignment> anchor;
  // Marks grow toward this point instead of toward the envelope (star plots).
  std::optional<Point> star_anchor;
  // Circular placement: each edge carries a ring-shaped mark centred on its
  // midpoint (radial bars). Required for donut_segment on open paths.
  bool radial = false;
  // Thickness of radial/donut rings as a fraction of their outer radius.
  double ring_width = 0.35;
  // Fill used when no colour mapping is present; palette by group otherwise.
  std::optional<std::string> colour;

  bool operator==(const MarkSpec&) const = default;
};

// Data already resolved to mark attributes by the binding layer.
struct Datum {
  std::size_t index = 0;  // category index in the dataset
  // Draw-edge slot the datum is placed on; sequential when absent. Stacked
  // data shares a slot.
  std::optional<std::size_t> slot;
  double start = 0.0;   // fraction of the envelope reach where the mark begins
  double height = 0.0;  // fraction of the envelope reach the mark spans
  double width = 1.0;   // fraction of the default mark width
  // Explicit radius as a fraction of half the edge length.
  std::optional<double> radius;
  // Explicit centre offset (fraction of reach) for circles; overrides the
  // sit-on-path rule.
  std::optional<double> position;
  double value_fraction = 0.0;  // value / range, for angular spans
  Colour colour{0x00, 0x72, 0xB2};
  std::string text;
};

struct LinearGradientPaint {
  Gradient gradient;
  double angle_deg = 90.0;  // direction the gradient runs, 90 = bottom to top
  bool operator==(const LinearGradientPaint&) const = default;
};

struct RadialGradientPaint {
  Gradient gradient;
  bool operator==(const RadialGradientPaint&) const = default;
};

using Paint = std::variant<Colour, LinearGradientPaint, RadialGradientPaint>;

struct Effect {
  enum class Kind { blur, shadow } kind = Kind::blur;
  double amount = 1.0;  // standard deviation in pixels
  bool operator==(const Effect&) const = default;
};

struct Style {
  std::optional<Paint> fill;
  std::optional<Colour> stroke;
  double stroke_width = 1.0;  // pixels
  double opacity = 1.0;
  std::optional<Effect> effect;
  bool operator==(const Style&) const = default;
};

struct AngularSpan {
  double start_deg = 0.0;  // clockwise from 12 o'clock
  double end_deg = 0.0;
  double sweep() const { return end_deg - start_deg; }
  bool operator==(const AngularSpan&) const = default;
};

struct Circle {
  Point center;
  double radius = 0.0;
};

struct TextMark {
  Point anchor;
  double size = 0.0;  // unit-space glyph height
  std::string content;
};

struct MarkGeometry {
  Shape shape = Shape::rect;
  Region area;               // closed outline, even-odd
  std::vector<Ring> lines;   // open polylines
  std::optional<TextMark> text;
  Style style;
  std::size_t edge_index = 0;
  std::size_t datum_index = 0;
  std::size_t group = 0;
  std::size_t z_order = 0;
  // Descriptors of the unclipped mark.
  Box placed_bounds;
  double placed_height = 0.0;  // unit-space length along the reach
  std::optional<Circle> circle;
  std::optional<AngularSpan> span;

  bool empty() const { return area.empty() && lines.empty() && !text; }
};

struct Placement {
  std::vector<MarkGeometry> marks;
  std::vector<std::string> warnings;
};

// One mark per (draw edge, datum) in walk order, clipped to the envelope.
// `grouping` consecutive draw edges share a group id. Throws
// Error(ShapeUnsupportedOnPath) for donut segments on an open path without
// radial placement.
Placement place_marks(const FlowPath& path, const Envelope& envelope, const MarkSpec& spec,
                      const std::vector<Datum>& data, std::size_t grouping = 1);

// extent * value / range. Values outside [0, range] are clamped and noted in
// `warnings` when given. Throws Error(ZeroRange) when range <= 0.
double scale_height(double value, double range, double extent,
                    std::vector<std::string>* warnings = nullptr);

struct StackInterval {
  double start = 0.0;
  double end = 0.0;
  bool operator==(const StackInterval&) const = default;
};

// Cumulative [start, end) fractions of `range`. A running total above range
// is clamped at 1 and reported through `warnings`.
std::vector<StackInterval> stack_offsets(const std::vector<double>& values, double range,
                                         std::vector<std::string>* warnings = nullptr);

// Consecutive spans of 360 * value / range degrees starting at 12 o'clock.
std::vector<AngularSpan> donut_segments(const std::vector<double>& values, double range);

enum class ScatterStrategy { vertical_from_axis, path_through_data };

struct ScatterResult {
  FlowPath path;
  std::vector<MarkGeometry> marks;
};

// `points` are data pairs already scaled into [0, 1].
ScatterResult scatter_place(const std::vector<Point>& points, ScatterStrategy strategy,
                            double radius = 0.03);

// Annular sector between two radii; full turns become an annulus.
Region annular_sector(Point center, double inner, double outer, AngularSpan span);

}  // namespace genii
