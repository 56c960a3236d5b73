#pragma once

#include <span>
#include <vector>

#include "genii/geometry.hpp"
#include "genii/marks.hpp"

namespace genii {

struct Ball {
  Point center;
  double radius = 0.0;
};

// Blinn-style field f(p) = sum r_i^2 / |p - c_i|^2. Returns +infinity when p
// coincides with a centre.
double metaball_field(Point p, std::span<const Ball> balls);

// Iso-contour f = threshold extracted by marching squares on a
// grid_resolution x grid_resolution lattice over the balls' bounding box,
// padded by the largest radius. Saddle cells are split by the field value at
// the cell centre. Outer rings run counter-clockwise, holes clockwise.
Region metaball_merge(std::span<const Ball> balls, double threshold = 1.0,
                      int grid_resolution = 128);

// Lattice the contour is extracted on, exposed for verification.
struct FieldGrid {
  Point origin;
  double cell = 0.0;
  int samples = 0;  // per side, resolution + 1
};
FieldGrid metaball_grid(std::span<const Ball> balls, int grid_resolution);

// Merges the circle marks of one group into a single blob mark. Marks that
// are not circles pass through unchanged.
std::vector<MarkGeometry> metaball_marks(const std::vector<MarkGeometry>& marks,
                                         double threshold, int grid_resolution);

}  // namespace genii
