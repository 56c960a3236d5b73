#include "genii/polygon_ops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/geometry.hpp>
#include <boost/geometry/geometries/point_xy.hpp>
#include <boost/geometry/geometries/polygon.hpp>

#include "clipper2/clipper.engine.h"

namespace genii::polygon {
namespace {

namespace c2 = Clipper2Lib;
namespace bg = boost::geometry;

using BPoint = bg::model::d2::point_xy<double>;
using BPolygon = bg::model::polygon<BPoint, /*clockwise=*/false, /*closed=*/true>;

// Booleans run on a fixed integer lattice of 2^-40 (about 1e-12), exactly.
// Every output vertex is a lattice point, so results that share a boundary
// agree on it bit for bit.
constexpr double kScale = 1099511627776.0;
constexpr double kLimit = 1e6;

c2::Point64 to_lattice(Point p) {
  const auto q = [](double v) {
    if (!std::isfinite(v)) v = 0.0;
    return static_cast<std::int64_t>(std::llround(std::clamp(v, -kLimit, kLimit) * kScale));
  };
  return {q(p.x), q(p.y)};
}

Point from_lattice(const c2::Point64& p) {
  return {static_cast<double>(p.x) / kScale, static_cast<double>(p.y) / kScale};
}

Ring dedupe(const Ring& ring) {
  Ring out;
  out.reserve(ring.size());
  for (const auto& p : ring)
    if (out.empty() || !(out.back() == p)) out.push_back(p);
  while (out.size() > 1 && out.front() == out.back()) out.pop_back();
  return out;
}

c2::Path64 to_path(const Ring& ring, bool counter_clockwise) {
  c2::Path64 out;
  out.reserve(ring.size());
  for (const auto& p : ring) out.push_back(to_lattice(p));
  if ((c2::Area(out) > 0) != counter_clockwise) std::reverse(out.begin(), out.end());
  return out;
}

// Outers counter-clockwise and holes clockwise, so the non-zero rule gives
// holes their meaning and treats overlapping outers as one area whatever
// winding the caller used.
c2::Paths64 to_paths(const Region& region) {
  c2::Paths64 out;
  for (const auto& poly : region) {
    const Ring outer = dedupe(poly.outer);
    if (outer.size() < 3) continue;
    out.push_back(to_path(outer, true));
    for (const auto& hole : poly.holes) {
      const Ring h = dedupe(hole);
      if (h.size() >= 3) out.push_back(to_path(h, false));
    }
  }
  return out;
}

Ring to_ring(const c2::Path64& path, bool counter_clockwise) {
  Ring out;
  out.reserve(path.size());
  for (const auto& p : path) out.push_back(from_lattice(p));
  if ((signed_area(out) > 0) != counter_clockwise) std::reverse(out.begin(), out.end());
  return out;
}

void collect(const c2::PolyPath64& outer, Region& out) {
  if (outer.Polygon().size() < 3) return;
  Polygon poly{to_ring(outer.Polygon(), true), {}};
  for (const auto& hole : outer) {
    if (hole->Polygon().size() >= 3) poly.holes.push_back(to_ring(hole->Polygon(), false));
    for (const auto& island : *hole) collect(*island, out);
  }
  out.push_back(std::move(poly));
}

Region run(c2::ClipType op, const c2::Paths64& subject, const c2::Paths64& clip) {
  c2::Clipper64 clipper;
  clipper.AddSubject(subject);
  if (!clip.empty()) clipper.AddClip(clip);
  c2::PolyTree64 tree;
  clipper.Execute(op, c2::FillRule::NonZero, tree);
  Region out;
  for (const auto& outer : tree) collect(*outer, out);
  return out;
}

bool is_simple(const Ring& ring) {
  BPolygon bp;
  for (const auto& p : ring) bg::append(bp.outer(), BPoint(p.x, p.y));
  bg::append(bp.outer(), BPoint(ring.front().x, ring.front().y));
  bg::correct(bp);
  return bg::is_valid(bp);
}

Ring hull(const Ring& ring) {
  BPolygon bp;
  for (const auto& p : ring) bg::append(bp.outer(), BPoint(p.x, p.y));
  BPolygon h;
  bg::convex_hull(bp, h);
  Ring out;
  for (const auto& p : h.outer()) out.push_back({p.x(), p.y()});
  return dedupe(out);
}

// Where `p` sits along `line`, as segment index plus fraction.
double station(const Ring& line, Point p) {
  double best = 0.0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < line.size(); ++i) {
    const Point a = line[i];
    const Point ab = line[i + 1] - a;
    const double len2 = ab.x * ab.x + ab.y * ab.y;
    const double t =
        len2 > 0 ? std::clamp(((p.x - a.x) * ab.x + (p.y - a.y) * ab.y) / len2, 0.0, 1.0) : 0.0;
    const double d = distance(p, a + ab * t);
    if (d < best_d) {
      best_d = d;
      best = static_cast<double>(i) + t;
    }
  }
  return best;
}

}  // namespace

Region make_valid(const Region& region) {
  Region cleaned;
  for (const auto& poly : region) {
    Ring outer = dedupe(poly.outer);
    if (outer.size() < 3) continue;
    // Bow-tie quads at sharp turns: fall back to the hull.
    if (!is_simple(outer)) outer = hull(outer);
    if (outer.size() < 3) continue;
    cleaned.push_back(Polygon{std::move(outer), poly.holes});
  }
  return run(c2::ClipType::Union, to_paths(cleaned), {});
}

Region unite(const Region& a, const Region& b) {
  return run(c2::ClipType::Union, to_paths(a), to_paths(b));
}

Region intersect(const Region& a, const Region& b) {
  return run(c2::ClipType::Intersection, to_paths(a), to_paths(b));
}

Region subtract(const Region& a, const Region& b) {
  return run(c2::ClipType::Difference, to_paths(a), to_paths(b));
}

Region unite_all(std::span<const Region> parts) {
  c2::Paths64 all;
  for (const auto& r : parts) {
    auto p = to_paths(r);
    all.insert(all.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  }
  if (all.empty()) return {};
  return run(c2::ClipType::Union, all, {});
}

std::vector<Ring> clip_polylines(std::span<const Ring> lines, const Region& clip) {
  const c2::Paths64 area = to_paths(clip);
  std::vector<Ring> out;
  if (area.empty()) return out;
  for (const auto& line : lines) {
    if (line.size() < 2) continue;
    c2::Path64 path;
    for (const auto& p : line) path.push_back(to_lattice(p));
    c2::Clipper64 clipper;
    clipper.AddOpenSubject({path});
    clipper.AddClip(area);
    c2::Paths64 closed, open;
    clipper.Execute(c2::ClipType::Intersection, c2::FillRule::NonZero, closed, open);
    std::vector<std::pair<double, Ring>> pieces;
    for (const auto& piece : open) {
      Ring r;
      for (const auto& p : piece) r.push_back(from_lattice(p));
      if (r.size() < 2) continue;
      // The clipper does not promise to keep direction; restore it.
      double s0 = station(line, r.front());
      const double s1 = station(line, r.back());
      if (s1 < s0) {
        std::reverse(r.begin(), r.end());
        s0 = s1;
      }
      pieces.emplace_back(s0, std::move(r));
    }
    std::stable_sort(pieces.begin(), pieces.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [s, r] : pieces) out.push_back(std::move(r));
  }
  return out;
}

Region unit_square() {
  return Region{Polygon{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {}}};
}

Region from_ring(Ring ring) { return Region{Polygon{std::move(ring), {}}}; }

bool contains(const Region& region, Point p, double tolerance) {
  int crossings = 0;
  for (const auto& poly : region) {
    if (tolerance > 0.0) {
      const auto near = [&](const Ring& ring) {
        for (std::size_t i = 0; i < ring.size(); ++i)
          if (distance_to_segment(p, ring[i], ring[(i + 1) % ring.size()]) <= tolerance)
            return true;
        return false;
      };
      if (near(poly.outer)) return true;
      for (const auto& h : poly.holes)
        if (near(h)) return true;
    }
    if (point_in_ring(p, poly.outer)) ++crossings;
    for (const auto& h : poly.holes)
      if (point_in_ring(p, h)) ++crossings;
  }
  return crossings % 2 == 1;
}

}  // namespace genii::polygon
