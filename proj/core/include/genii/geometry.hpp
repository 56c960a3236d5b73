#pragma once

#include <cmath>
#include <span>
#include <vector>

namespace genii {

// A position or direction in unit design space. y points up.
struct Point {
  double x = 0.0;
  double y = 0.0;

  constexpr Point& operator+=(Point o) noexcept { x += o.x; y += o.y; return *this; }
  constexpr Point& operator-=(Point o) noexcept { x -= o.x; y -= o.y; return *this; }
  friend constexpr Point operator+(Point a, Point b) noexcept { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point operator-(Point a, Point b) noexcept { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point operator-(Point a) noexcept { return {-a.x, -a.y}; }
  friend constexpr Point operator*(Point a, double s) noexcept { return {a.x * s, a.y * s}; }
  friend constexpr Point operator*(double s, Point a) noexcept { return {a.x * s, a.y * s}; }
  friend constexpr Point operator/(Point a, double s) noexcept { return {a.x / s, a.y / s}; }
  friend constexpr bool operator==(Point, Point) noexcept = default;
};

constexpr double dot(Point a, Point b) noexcept { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point a, Point b) noexcept { return a.x * b.y - a.y * b.x; }
inline double length(Point a) noexcept { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) noexcept { return length(b - a); }
constexpr Point lerp(Point a, Point b, double t) noexcept { return a + (b - a) * t; }
constexpr Point perp_ccw(Point a) noexcept { return {-a.y, a.x}; }

// Closed rings repeat nothing: the last point connects back to the first.
using Ring = std::vector<Point>;

struct Polygon {
  Ring outer;
  std::vector<Ring> holes;

  bool operator==(const Polygon&) const = default;
};

// A set of polygons, filled with even-odd semantics.
using Region = std::vector<Polygon>;

// Signed shoelace area; positive for counter-clockwise rings.
double signed_area(std::span<const Point> ring) noexcept;
// Area of a region with holes subtracted.
double area(const Region& region) noexcept;
double perimeter(std::span<const Point> ring) noexcept;

struct Box {
  Point min{INFINITY, INFINITY};
  Point max{-INFINITY, -INFINITY};

  bool empty() const noexcept { return min.x > max.x || min.y > max.y; }
  double width() const noexcept { return empty() ? 0.0 : max.x - min.x; }
  double height() const noexcept { return empty() ? 0.0 : max.y - min.y; }
  void expand(Point p) noexcept {
    min.x = std::fmin(min.x, p.x);
    min.y = std::fmin(min.y, p.y);
    max.x = std::fmax(max.x, p.x);
    max.y = std::fmax(max.y, p.y);
  }
};

Box bounds(std::span<const Point> points) noexcept;
Box bounds(const Region& region) noexcept;

// Point-in-ring test; points within `tolerance` of the boundary count as inside.
bool point_in_ring(Point p, std::span<const Point> ring, double tolerance = 0.0) noexcept;
double distance_to_segment(Point p, Point a, Point b) noexcept;

// Regular polygon approximation of a circle, counter-clockwise.
Ring circle_ring(Point center, double radius, int segments = 48);
Ring ellipse_ring(Point center, double rx, double ry, Point x_axis, int segments = 48);

}  // namespace genii
