#include "genii/metaball.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <unordered_map>

namespace genii {
namespace {

constexpr double kFieldCap = 1e12;

// Crossing points are keyed by the lattice edge they lie on.
std::uint64_t horizontal_key(int i, int j) {
  return (static_cast<std::uint64_t>(j) << 32 | static_cast<std::uint32_t>(i)) << 1;
}
std::uint64_t vertical_key(int i, int j) {
  return ((static_cast<std::uint64_t>(j) << 32 | static_cast<std::uint32_t>(i)) << 1) | 1u;
}

struct Segment {
  std::uint64_t to;
  Point start;
};

}  // namespace

double metaball_field(Point p, std::span<const Ball> balls) {
  double sum = 0.0;
  for (const auto& b : balls) {
    const Point d = p - b.center;
    const double d2 = dot(d, d);
    if (d2 == 0.0) return std::numeric_limits<double>::infinity();
    sum += b.radius * b.radius / d2;
  }
  return sum;
}

FieldGrid metaball_grid(std::span<const Ball> balls, int grid_resolution) {
  Box box;
  double max_r = 0.0;
  for (const auto& b : balls) {
    box.expand(b.center - Point{b.radius, b.radius});
    box.expand(b.center + Point{b.radius, b.radius});
    max_r = std::max(max_r, b.radius);
  }
  const double side = std::max(box.width(), box.height()) + 2 * max_r;
  const Point mid{(box.min.x + box.max.x) / 2, (box.min.y + box.max.y) / 2};
  FieldGrid g;
  g.samples = grid_resolution + 1;
  g.cell = side / grid_resolution;
  g.origin = mid - Point{side / 2, side / 2};
  return g;
}

Region metaball_merge(std::span<const Ball> balls, double threshold, int grid_resolution) {
  if (balls.empty() || grid_resolution < 1 || !(threshold > 0.0)) return {};
  const FieldGrid grid = metaball_grid(balls, grid_resolution);
  if (!(grid.cell > 0.0)) return {};
  const int n = grid.samples;

  const auto at = [&](int i, int j) {
    return grid.origin + Point{i * grid.cell, j * grid.cell};
  };
  std::vector<double> field(static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      double f = 0.0;
      // Outermost samples are forced outside so every contour closes.
      if (i > 0 && j > 0 && i < n - 1 && j < n - 1)
        f = std::min(metaball_field(at(i, j), balls), kFieldCap);
      field[static_cast<std::size_t>(j) * n + i] = f;
    }
  }
  const auto value = [&](int i, int j) { return field[static_cast<std::size_t>(j) * n + i]; };
  const auto inside = [&](int i, int j) { return value(i, j) >= threshold; };

  const auto crossing = [&](int ia, int ja, int ib, int jb) {
    const double fa = value(ia, ja);
    const double fb = value(ib, jb);
    const double t = fb == fa ? 0.5 : std::clamp((threshold - fa) / (fb - fa), 0.0, 1.0);
    return lerp(at(ia, ja), at(ib, jb), t);
  };

  // Cell corners counter-clockwise: c0 (i,j), c1 (i+1,j), c2 (i+1,j+1),
  // c3 (i,j+1). Edge k runs from corner k to corner k+1. A segment starts on
  // an edge that goes inside->outside and ends on one that goes
  // outside->inside, which keeps the filled side on its left.
  std::unordered_map<std::uint64_t, Segment> segments;
  for (int j = 0; j + 1 < n; ++j) {
    for (int i = 0; i + 1 < n; ++i) {
      const int ci[4] = {i, i + 1, i + 1, i};
      const int cj[4] = {j, j, j + 1, j + 1};
      bool in[4];
      for (int k = 0; k < 4; ++k) in[k] = inside(ci[k], cj[k]);
      const std::uint64_t keys[4] = {horizontal_key(i, j), vertical_key(i + 1, j),
                                     horizontal_key(i, j + 1), vertical_key(i, j)};
      const auto point_on = [&](int k) {
        const int a = k;
        const int b = (k + 1) % 4;
        return crossing(ci[a], cj[a], ci[b], cj[b]);
      };
      const auto add = [&](int from_edge, int to_edge) {
        segments[keys[from_edge]] = Segment{keys[to_edge], point_on(from_edge)};
      };

      int starts[2];
      int ends[2];
      int ns = 0;
      int ne = 0;
      for (int k = 0; k < 4; ++k) {
        const bool a = in[k];
        const bool b = in[(k + 1) % 4];
        if (a && !b) starts[ns++] = k;
        if (!a && b) ends[ne++] = k;
      }
      if (ns == 0) continue;
      if (ns == 1) {
        add(starts[0], ends[0]);
        continue;
      }
      const Point center = at(i, j) + Point{grid.cell / 2, grid.cell / 2};
      const bool center_in = metaball_field(center, balls) >= threshold;
      if (in[0]) {
        // c0 and c2 inside; starts on edges 0 and 2, ends on 1 and 3.
        if (center_in) {
          add(0, 1);
          add(2, 3);
        } else {
          add(0, 3);
          add(2, 1);
        }
      } else {
        // c1 and c3 inside; starts on edges 1 and 3, ends on 0 and 2.
        if (center_in) {
          add(1, 2);
          add(3, 0);
        } else {
          add(1, 0);
          add(3, 2);
        }
      }
    }
  }

  std::vector<Ring> outers;
  std::vector<Ring> holes;
  while (!segments.empty()) {
    auto it = segments.begin();
    const std::uint64_t first = it->first;
    Ring ring;
    std::uint64_t key = first;
    while (true) {
      auto found = segments.find(key);
      if (found == segments.end()) break;
      ring.push_back(found->second.start);
      key = found->second.to;
      segments.erase(found);
      if (key == first) break;
    }
    if (ring.size() < 3) continue;
    (signed_area(ring) > 0 ? outers : holes).push_back(std::move(ring));
  }

  Region region;
  region.reserve(outers.size());
  for (auto& o : outers) region.push_back(Polygon{std::move(o), {}});
  for (auto& h : holes) {
    // Smallest outer that contains the hole.
    Polygon* best = nullptr;
    double best_area = 0.0;
    for (auto& poly : region) {
      if (!point_in_ring(h.front(), poly.outer)) continue;
      const double a = std::abs(signed_area(poly.outer));
      if (!best || a < best_area) {
        best = &poly;
        best_area = a;
      }
    }
    if (best) best->holes.push_back(std::move(h));
  }
  return region;
}

std::vector<MarkGeometry> metaball_marks(const std::vector<MarkGeometry>& marks, double threshold,
                                         int grid_resolution) {
  std::vector<MarkGeometry> out;
  std::vector<Ball> balls;
  std::optional<std::size_t> blob_slot;
  for (const auto& m : marks) {
    if (m.circle) {
      balls.push_back({m.circle->center, m.circle->radius});
      if (!blob_slot) {
        blob_slot = out.size();
        out.push_back(m);
      }
      continue;
    }
    out.push_back(m);
  }
  if (blob_slot) {
    MarkGeometry& blob = out[*blob_slot];
    blob.area = metaball_merge(balls, threshold, grid_resolution);
    blob.circle.reset();
    blob.placed_bounds = bounds(blob.area);
  }
  return out;
}

}  // namespace genii
