#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "genii/marks.hpp"

namespace genii {

enum class FilterKind {
  solid_fill,
  linear_gradient,
  radial_gradient,
  stroke,
  opacity,
  overlap,
  cutout,
  union_,
  intersect,
  subtract,
  metaball,
  round_corners,
  smooth,
  blur,
  shadow,
};

std::string_view to_string(FilterKind kind);
std::optional<FilterKind> filter_kind_from_string(std::string_view s);
bool is_combine(FilterKind kind);
bool is_style(FilterKind kind);

struct StopSpec {
  double offset = 0.0;
  std::string colour;
  bool operator==(const StopSpec&) const = default;
};

// Parameters for every filter kind; each kind reads only its own fields.
// Colours stay textual so a gene round-trips byte for byte.
struct FilterSpec {
  FilterKind kind = FilterKind::solid_fill;
  std::string colour = "#000000";  // solid_fill, stroke
  std::vector<StopSpec> stops;     // gradients
  double angle_deg = 90.0;         // linear_gradient direction
  double width = 1.0;              // stroke width in pixels
  double alpha = 1.0;              // opacity
  double threshold = 1.0;          // metaball iso level
  int grid = 128;                  // metaball samples per side
  double radius = 0.0;             // round_corners, unit space
  int iterations = 3;              // smooth
  double amount = 2.0;             // blur / shadow deviation in pixels

  bool operator==(const FilterSpec&) const = default;
};

// Throws Error(BadColour) for stops or colours that do not parse.
Gradient gradient_from_stops(const std::vector<StopSpec>& stops);

enum class CombineMode { overlap, cutout, union_, intersect, subtract };

// Boolean combination of marks in z order:
//   overlap   - unchanged, painter's order
//   cutout    - each mark minus every later mark
//   union_    - one mark covering all
//   intersect - one mark covering the common part
//   subtract  - first mark minus all later ones
// Throws Error(NonPolygonalInput) if any mark is an open polyline or text.
std::vector<MarkGeometry> combine(const std::vector<MarkGeometry>& marks, CombineMode mode);

// Attaches fill, stroke, opacity or an effect; outlines are untouched.
// Throws Error(BadColour).
std::vector<MarkGeometry> apply_style(std::vector<MarkGeometry> marks, const FilterSpec& filter);

// Replaces every corner with a circular arc of `radius`. Throws
// Error(RadiusTooLarge) when radius exceeds half the shortest side of a ring.
std::vector<MarkGeometry> round_corners(std::vector<MarkGeometry> marks, double radius);
Ring round_ring_corners(const Ring& ring, double radius);

// Corner cutting: each pass replaces every vertex pair with points at 1/4 and
// 3/4 along the edge, doubling the vertex count of closed rings.
std::vector<MarkGeometry> smooth(std::vector<MarkGeometry> marks, int iterations);
Ring smooth_ring(const Ring& ring, int iterations, bool closed = true);

}  // namespace genii
