#include "genii/path_generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "genii/errors.hpp"

namespace genii {
namespace {

constexpr Point kCenter{0.5, 0.5};

struct ModeName {
  PathMode mode;
  std::string_view name;
};

constexpr ModeName kModeNames[] = {
    {PathMode::inline_linear, "inline_linear"},
    {PathMode::disjoint_inline, "disjoint_inline"},
    {PathMode::ring, "ring"},
    {PathMode::parametric_spiral, "parametric_spiral"},
    {PathMode::golden_spiral, "golden_spiral"},
    {PathMode::zigzag, "zigzag"},
    {PathMode::sweep, "sweep"},
    {PathMode::scan, "scan"},
    {PathMode::diagonal, "diagonal"},
    {PathMode::hilbert, "hilbert"},
    {PathMode::peano, "peano"},
    {PathMode::z_mirror, "z_mirror"},
    {PathMode::gray, "gray"},
    {PathMode::user_points, "user_points"},
    {PathMode::random, "random"},
};

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::int64_t curve_base(PathMode mode) { return mode == PathMode::peano ? 3 : 2; }

void check_index(std::uint64_t index, std::int64_t side) {
  const auto cells = static_cast<std::uint64_t>(side) * static_cast<std::uint64_t>(side);
  if (index >= cells)
    throw Error(ErrorCode::IndexOutOfRange,
                "curve index " + std::to_string(index) + " outside grid of " +
                    std::to_string(cells) + " cells");
}

void check_order(int order, int max_order) {
  if (order < 0 || order > max_order)
    throw Error(ErrorCode::BadOrder, "curve order " + std::to_string(order) + " out of range");
}

// Largest exponent k with base^k == value, or nullopt.
std::optional<int> exact_log(std::uint64_t value, std::uint64_t base) {
  if (value == 0) return std::nullopt;
  int k = 0;
  while (value % base == 0) {
    value /= base;
    ++k;
  }
  if (value != 1) return std::nullopt;
  return k;
}

// Grid side for a space-filling spec; validates order against point_count.
std::int64_t grid_side(const PathSpec& spec) {
  const std::int64_t base = curve_base(spec.mode);
  const bool raster = spec.mode == PathMode::sweep || spec.mode == PathMode::scan ||
                      spec.mode == PathMode::diagonal;
  if (spec.order) {
    check_order(*spec.order, base == 3 ? 12 : 15);
    const std::int64_t side = ipow(base, *spec.order);
    if (static_cast<std::int64_t>(spec.point_count) != side * side)
      throw Error(ErrorCode::BadOrder,
                  "point count " + std::to_string(spec.point_count) + " does not match order " +
                      std::to_string(*spec.order) + " (expected " + std::to_string(side * side) +
                      ")");
    return side;
  }
  if (raster) {
    const auto side = static_cast<std::int64_t>(
        std::llround(std::sqrt(static_cast<double>(spec.point_count))));
    if (side < 1 || side * side != static_cast<std::int64_t>(spec.point_count))
      throw Error(ErrorCode::BadOrder,
                  "point count " + std::to_string(spec.point_count) + " is not a square");
    return side;
  }
  const auto k = exact_log(spec.point_count, static_cast<std::uint64_t>(base * base));
  if (!k)
    throw Error(ErrorCode::BadOrder, "point count " + std::to_string(spec.point_count) +
                                         " is not a power of " + std::to_string(base * base));
  return ipow(base, *k);
}

GridPoint peano_rec(int order, std::uint64_t index) {
  if (order == 0) return {0, 0};
  const auto sub_side = ipow(3, order - 1);
  const auto sub_cells = static_cast<std::uint64_t>(sub_side * sub_side);
  const auto block = static_cast<std::int64_t>(index / sub_cells);
  const std::int64_t bx = block / 3;
  const std::int64_t by = (bx % 2 == 0) ? block % 3 : 2 - block % 3;
  GridPoint p = peano_rec(order - 1, index % sub_cells);
  if (by % 2 == 1) p.x = sub_side - 1 - p.x;
  if (bx % 2 == 1) p.y = sub_side - 1 - p.y;
  return {bx * sub_side + p.x, by * sub_side + p.y};
}

GridPoint deinterleave(std::uint64_t v) {
  GridPoint p;
  for (int bit = 0; bit < 32; ++bit) {
    p.x |= static_cast<std::int64_t>((v >> (2 * bit)) & 1u) << bit;
    p.y |= static_cast<std::int64_t>((v >> (2 * bit + 1)) & 1u) << bit;
  }
  return p;
}

// Scales and centres points uniformly so their bounding box fits inside
// [margin, 1 - margin].
std::vector<Point> fit_to_unit(std::vector<Point> pts, double margin = 0.05) {
  const Box box = bounds(pts);
  const double extent = std::max(box.width(), box.height());
  const Point mid{(box.min.x + box.max.x) / 2, (box.min.y + box.max.y) / 2};
  const double scale = extent > 0 ? (1.0 - 2 * margin) / extent : 0.0;
  for (auto& p : pts) p = kCenter + (p - mid) * scale;
  return pts;
}

std::vector<Point> grid_points(const PathSpec& spec) {
  const std::int64_t side = grid_side(spec);
  const auto cells = static_cast<std::uint64_t>(side * side);
  // Raster modes accept any side and never read the order.
  const int order = spec.order.value_or(
      exact_log(static_cast<std::uint64_t>(side), static_cast<std::uint64_t>(curve_base(spec.mode)))
          .value_or(0));
  std::vector<Point> pts;
  pts.reserve(cells);
  for (std::uint64_t d = 0; d < cells; ++d) {
    GridPoint g;
    switch (spec.mode) {
      case PathMode::hilbert: g = hilbert_d2xy(order, d); break;
      case PathMode::peano: g = peano_d2xy(order, d); break;
      case PathMode::z_mirror: g = z_mirror_d2xy(order, d); break;
      case PathMode::gray: g = gray_d2xy(order, d); break;
      case PathMode::sweep: g = sweep_d2xy(side, d); break;
      case PathMode::scan: g = scan_d2xy(side, d); break;
      default: g = diagonal_d2xy(side, d); break;
    }
    pts.push_back({(static_cast<double>(g.x) + 0.5) / static_cast<double>(side),
                   (static_cast<double>(g.y) + 0.5) / static_cast<double>(side)});
  }
  return pts;
}

std::size_t linear_count(const PathSpec& spec) {
  if (spec.point_distance && *spec.point_distance > 0)
    return static_cast<std::size_t>(std::floor(1.0 / *spec.point_distance + 1e-9)) + 1;
  return spec.point_count;
}

double linear_x(const PathSpec& spec, std::size_t i, std::size_t n) {
  if (spec.point_distance && *spec.point_distance > 0)
    return std::min(1.0, static_cast<double>(i) * *spec.point_distance);
  if (n == 1) return 0.5;
  return static_cast<double>(i) / static_cast<double>(n - 1);
}

std::size_t ring_segments(const PathSpec& spec) {
  if (spec.point_distance && *spec.point_distance > 0)
    return std::max<std::size_t>(
        3, static_cast<std::size_t>(std::llround(std::numbers::pi / *spec.point_distance)));
  return std::max<std::size_t>(1, spec.point_count);
}

}  // namespace

std::string_view to_string(PathMode mode) {
  for (const auto& m : kModeNames)
    if (m.mode == mode) return m.name;
  return "unknown";
}

std::optional<PathMode> path_mode_from_string(std::string_view name) {
  for (const auto& m : kModeNames)
    if (m.name == name) return m.mode;
  return std::nullopt;
}

bool is_space_filling(PathMode mode) {
  switch (mode) {
    case PathMode::sweep:
    case PathMode::scan:
    case PathMode::diagonal:
    case PathMode::hilbert:
    case PathMode::peano:
    case PathMode::z_mirror:
    case PathMode::gray:
      return true;
    default:
      return false;
  }
}

const std::vector<PathModeInfo>& path_catalogue() {
  static const std::vector<PathModeInfo> catalogue = {
      {PathMode::inline_linear, "inline_linear",
       "evenly spaced points on a horizontal centre line", {"pointCount", "pointDistance", "rotation", "jumps"}},
      {PathMode::disjoint_inline, "disjoint_inline",
       "a line split over two rows joined by a jump", {"pointCount", "pointDistance", "rotation", "jumps"}},
      {PathMode::ring, "ring",
       "circle of points whose first and last coordinates coincide", {"pointCount", "pointDistance", "rotation", "jumps"}},
      {PathMode::parametric_spiral, "parametric_spiral",
       "square spiral of straight runs turning 90 degrees with growing lengths", {"pointCount", "rotation", "jumps"}},
      {PathMode::golden_spiral, "golden_spiral",
       "logarithmic spiral growing by the golden ratio each quarter turn", {"pointCount", "rotation", "jumps"}},
      {PathMode::zigzag, "zigzag",
       "points alternating between a low and a high row", {"pointCount", "pointDistance", "rotation", "jumps"}},
      {PathMode::sweep, "sweep",
       "row-major raster over a square grid", {"pointCount", "order", "rotation", "jumps"}},
      {PathMode::scan, "scan",
       "serpentine raster over a square grid", {"pointCount", "order", "rotation", "jumps"}},
      {PathMode::diagonal, "diagonal",
       "zig-zag along anti-diagonals of a square grid", {"pointCount", "order", "rotation", "jumps"}},
      {PathMode::hilbert, "hilbert",
       "Hilbert curve over a 2^order grid", {"order", "pointCount", "rotation", "jumps"}},
      {PathMode::peano, "peano",
       "Peano curve over a 3^order grid", {"order", "pointCount", "rotation", "jumps"}},
      {PathMode::z_mirror, "z_mirror",
       "Morton order with mirrored odd rows over a 2^order grid", {"order", "pointCount", "rotation", "jumps"}},
      {PathMode::gray, "gray",
       "Gray-code order over a 2^order grid", {"order", "pointCount", "rotation", "jumps"}},
      {PathMode::user_points, "user_points",
       "points placed by hand", {"points", "rotation", "jumps"}},
      {PathMode::random, "random",
       "points drawn from the seeded stream of the gene name", {"pointCount", "rotation", "jumps"}},
  };
  return catalogue;
}

GridPoint hilbert_d2xy(int order, std::uint64_t index) {
  check_order(order, 31);
  const std::int64_t side = ipow(2, order);
  check_index(index, side);
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::uint64_t t = index;
  for (std::int64_t s = 1; s < side; s *= 2) {
    const std::int64_t rx = static_cast<std::int64_t>(1 & (t / 2));
    const std::int64_t ry = static_cast<std::int64_t>(1 & (t ^ static_cast<std::uint64_t>(rx)));
    if (ry == 0) {
      if (rx == 1) {
        x = s - 1 - x;
        y = s - 1 - y;
      }
      std::swap(x, y);
    }
    x += s * rx;
    y += s * ry;
    t /= 4;
  }
  return {x, y};
}

GridPoint peano_d2xy(int order, std::uint64_t index) {
  check_order(order, 19);
  check_index(index, ipow(3, order));
  return peano_rec(order, index);
}

GridPoint z_mirror_d2xy(int order, std::uint64_t index) {
  check_order(order, 31);
  const std::int64_t side = ipow(2, order);
  check_index(index, side);
  GridPoint p = deinterleave(index);
  if (p.y % 2 == 1) p.x = side - 1 - p.x;
  return p;
}

GridPoint gray_d2xy(int order, std::uint64_t index) {
  check_order(order, 31);
  check_index(index, ipow(2, order));
  return deinterleave(index ^ (index >> 1));
}

GridPoint sweep_d2xy(std::int64_t side, std::uint64_t index) {
  check_index(index, side);
  const auto s = static_cast<std::uint64_t>(side);
  return {static_cast<std::int64_t>(index % s), static_cast<std::int64_t>(index / s)};
}

GridPoint scan_d2xy(std::int64_t side, std::uint64_t index) {
  GridPoint p = sweep_d2xy(side, index);
  if (p.y % 2 == 1) p.x = side - 1 - p.x;
  return p;
}

GridPoint diagonal_d2xy(std::int64_t side, std::uint64_t index) {
  check_index(index, side);
  auto remaining = static_cast<std::int64_t>(index);
  for (std::int64_t diag = 0; diag <= 2 * (side - 1); ++diag) {
    const std::int64_t lo = std::max<std::int64_t>(0, diag - (side - 1));
    const std::int64_t hi = std::min<std::int64_t>(diag, side - 1);
    const std::int64_t len = hi - lo + 1;
    if (remaining < len) {
      // Even diagonals run with x increasing, odd ones with x decreasing.
      const std::int64_t x = diag % 2 == 0 ? lo + remaining : hi - remaining;
      return {x, diag - x};
    }
    remaining -= len;
  }
  return {side - 1, side - 1};
}

std::size_t resolved_point_count(const PathSpec& spec) {
  switch (spec.mode) {
    case PathMode::inline_linear:
    case PathMode::disjoint_inline:
    case PathMode::zigzag:
      return linear_count(spec);
    case PathMode::ring:
      return ring_segments(spec) + 1;
    case PathMode::user_points:
      return static_cast<std::size_t>(
          std::count_if(spec.user_points.begin(), spec.user_points.end(),
                        [](const auto& p) { return p.has_value(); }));
    default:
      if (is_space_filling(spec.mode)) {
        const auto side = static_cast<std::size_t>(grid_side(spec));
        return side * side;
      }
      return spec.point_count;
  }
}

FlowPath rotate_path(const FlowPath& path, double degrees) {
  if (degrees == 0.0) return path;
  const double rad = degrees * std::numbers::pi / 180.0;
  const double c = std::cos(rad);
  const double s = std::sin(rad);
  return path.transformed([&](Point p) {
    const Point d = p - kCenter;
    const Point r{kCenter.x + d.x * c - d.y * s, kCenter.y + d.x * s + d.y * c};
    return Point{std::clamp(r.x, 0.0, 1.0), std::clamp(r.y, 0.0, 1.0)};
  });
}

FlowPath generate(const PathSpec& spec, Seed seed) {
  std::vector<Point> pts;
  std::vector<std::size_t> auto_jumps;

  switch (spec.mode) {
    case PathMode::inline_linear: {
      const std::size_t n = linear_count(spec);
      for (std::size_t i = 0; i < n; ++i) pts.push_back({linear_x(spec, i, n), 0.5});
      break;
    }
    case PathMode::disjoint_inline: {
      const std::size_t n = linear_count(spec);
      const std::size_t first = (n + 1) / 2;
      const std::size_t second = n - first;
      for (std::size_t i = 0; i < first; ++i) pts.push_back({linear_x(spec, i, first), 0.75});
      for (std::size_t i = 0; i < second; ++i) pts.push_back({linear_x(spec, i, second), 0.25});
      if (second > 0) auto_jumps.push_back(first - 1);
      break;
    }
    case PathMode::ring: {
      const std::size_t segments = ring_segments(spec);
      for (std::size_t k = 0; k < segments; ++k) {
        const double t = 2.0 * std::numbers::pi * static_cast<double>(k) /
                         static_cast<double>(segments);
        pts.push_back({0.5 + 0.5 * std::cos(t), 0.5 + 0.5 * std::sin(t)});
      }
      pts.push_back(pts.front());
      break;
    }
    case PathMode::parametric_spiral: {
      constexpr Point kDirs[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      Point p{0, 0};
      pts.push_back(p);
      for (std::size_t k = 0; pts.size() < spec.point_count; ++k) {
        p += kDirs[k % 4] * static_cast<double>(k / 2 + 1);
        pts.push_back(p);
      }
      pts = fit_to_unit(std::move(pts));
      break;
    }
    case PathMode::golden_spiral: {
      const double step = std::numbers::pi / 4.0;
      for (std::size_t k = 0; k < spec.point_count; ++k) {
        const double theta = step * static_cast<double>(k);
        const double r = std::pow(std::numbers::phi, theta / (std::numbers::pi / 2.0));
        pts.push_back({r * std::cos(theta), r * std::sin(theta)});
      }
      pts = fit_to_unit(std::move(pts));
      break;
    }
    case PathMode::zigzag: {
      const std::size_t n = linear_count(spec);
      for (std::size_t i = 0; i < n; ++i)
        pts.push_back({linear_x(spec, i, n), i % 2 == 0 ? 0.25 : 0.75});
      break;
    }
    case PathMode::user_points: {
      if (spec.user_points.empty())
        throw Error(ErrorCode::MissingPoints, "user_points mode requires points");
      FlowPath raw = normalize_path(spec.user_points);
      pts = raw.vertices();
      break;
    }
    case PathMode::random: {
      Rng rng(seed);
      for (std::size_t i = 0; i < spec.point_count; ++i) {
        const double x = rng.uniform(0.1, 0.9);
        const double y = rng.uniform(0.1, 0.9);
        pts.push_back({x, y});
      }
      break;
    }
    default:
      if (!is_space_filling(spec.mode))
        throw Error(ErrorCode::UnknownMode, "unknown path mode");
      pts = grid_points(spec);
      break;
  }

  if (pts.empty()) throw Error(ErrorCode::EmptyPath, "path generator produced no vertices");
  for (auto& p : pts) p = {std::clamp(p.x, 0.0, 1.0), std::clamp(p.y, 0.0, 1.0)};

  FlowPath rotated = rotate_path(FlowPath(std::move(pts)), spec.rotation_deg);
  std::vector<std::size_t> jumps = auto_jumps;
  jumps.insert(jumps.end(), spec.jumps.begin(), spec.jumps.end());
  return FlowPath(rotated.vertices(), jumps);
}

}  // namespace genii
