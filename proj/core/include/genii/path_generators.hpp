#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "genii/path.hpp"
#include "genii/seed.hpp"

namespace genii {

enum class PathMode {
  inline_linear,
  disjoint_inline,
  ring,
  parametric_spiral,
  golden_spiral,
  zigzag,
  sweep,
  scan,
  diagonal,
  hilbert,
  peano,
  z_mirror,
  gray,
  user_points,
  random,
};

std::string_view to_string(PathMode mode);
std::optional<PathMode> path_mode_from_string(std::string_view name);
bool is_space_filling(PathMode mode);

struct PathSpec {
  PathMode mode = PathMode::inline_linear;
  std::size_t point_count = 6;
  double rotation_deg = 0.0;
  // Spacing between consecutive vertices. When set it overrides point_count
  // for the linear family and for ring.
  std::optional<double> point_distance;
  std::vector<std::size_t> jumps;
  std::vector<std::optional<Point>> user_points;
  // Curve order for space-filling modes; derived from point_count when absent.
  std::optional<int> order;

  bool operator==(const PathSpec&) const = default;
};

struct PathModeInfo {
  PathMode mode;
  std::string_view name;
  std::string_view description;
  std::vector<std::string_view> parameters;
};

// Every built-in mode with a one-line description and its parameter names.
const std::vector<PathModeInfo>& path_catalogue();

// Builds the path for `spec` in unit space, rotated about (0.5, 0.5), with the
// listed jump edges flagged. `seed` only matters for PathMode::random.
FlowPath generate(const PathSpec& spec, Seed seed = {});

// Rotates every vertex about (0.5, 0.5) and re-clamps into the unit square.
FlowPath rotate_path(const FlowPath& path, double degrees);

struct GridPoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
  bool operator==(const GridPoint&) const = default;
};

// Index -> grid cell maps. `order` is the curve order; the grid side is
// 2^order (3^order for Peano). Throw Error(IndexOutOfRange) for index >= side^2.
GridPoint hilbert_d2xy(int order, std::uint64_t index);
GridPoint peano_d2xy(int order, std::uint64_t index);
GridPoint z_mirror_d2xy(int order, std::uint64_t index);
GridPoint gray_d2xy(int order, std::uint64_t index);
// Raster-style maps over an arbitrary side.
GridPoint sweep_d2xy(std::int64_t side, std::uint64_t index);
GridPoint scan_d2xy(std::int64_t side, std::uint64_t index);
GridPoint diagonal_d2xy(std::int64_t side, std::uint64_t index);

// Number of vertices `spec` will produce (after point_distance and order are
// taken into account). Throws BadOrder for impossible space-filling sizes.
std::size_t resolved_point_count(const PathSpec& spec);

}  // namespace genii
