#include "genii/geometry.hpp"

#include <algorithm>
#include <numbers>

namespace genii {

double signed_area(std::span<const Point> ring) noexcept {
  const std::size_t n = ring.size();
  if (n < 3) return 0.0;
  double twice = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = ring[i];
    const Point& b = ring[(i + 1) % n];
    twice += a.x * b.y - b.x * a.y;
  }
  return twice * 0.5;
}

double area(const Region& region) noexcept {
  double total = 0.0;
  for (const auto& poly : region) {
    total += std::abs(signed_area(poly.outer));
    for (const auto& hole : poly.holes) total -= std::abs(signed_area(hole));
  }
  return total;
}

double perimeter(std::span<const Point> ring) noexcept {
  const std::size_t n = ring.size();
  if (n < 2) return 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) total += distance(ring[i], ring[(i + 1) % n]);
  return total;
}

Box bounds(std::span<const Point> points) noexcept {
  Box box;
  for (const auto& p : points) box.expand(p);
  return box;
}

Box bounds(const Region& region) noexcept {
  Box box;
  for (const auto& poly : region)
    for (const auto& p : poly.outer) box.expand(p);
  return box;
}

double distance_to_segment(Point p, Point a, Point b) noexcept {
  const Point ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return distance(p, a);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return distance(p, a + ab * t);
}

bool point_in_ring(Point p, std::span<const Point> ring, double tolerance) noexcept {
  const std::size_t n = ring.size();
  if (n == 0) return false;
  if (tolerance > 0.0) {
    for (std::size_t i = 0; i < n; ++i)
      if (distance_to_segment(p, ring[i], ring[(i + 1) % n]) <= tolerance) return true;
  }
  if (n < 3) return false;
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point& a = ring[i];
    const Point& b = ring[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x;
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

Ring circle_ring(Point center, double radius, int segments) {
  return ellipse_ring(center, radius, radius, {1.0, 0.0}, segments);
}

Ring ellipse_ring(Point center, double rx, double ry, Point x_axis, int segments) {
  Ring ring;
  ring.reserve(static_cast<std::size_t>(segments));
  const Point u = x_axis / length(x_axis);
  const Point v = perp_ccw(u);
  for (int i = 0; i < segments; ++i) {
    const double t = 2.0 * std::numbers::pi * i / segments;
    ring.push_back(center + u * (rx * std::cos(t)) + v * (ry * std::sin(t)));
  }
  return ring;
}

}  // namespace genii
