#include "oracles.hpp"

#include <algorithm>
#include <cmath>

namespace genii::testing {

std::uint32_t bigint_hash_oracle(const std::vector<std::uint32_t>& code_points) {
  // Little-endian base 2^32 limbs; h = h * 31 + c without ever wrapping.
  std::vector<std::uint64_t> limbs{0};
  for (std::uint32_t c : code_points) {
    std::uint64_t carry = c;
    for (auto& limb : limbs) {
      const std::uint64_t v = limb * 31 + carry;
      limb = v & 0xFFFFFFFFu;
      carry = v >> 32;
    }
    if (carry) limbs.push_back(carry);
  }
  return static_cast<std::uint32_t>(limbs[0]);
}

std::string encode_utf8(const std::vector<std::uint32_t>& cps) {
  std::string out;
  for (std::uint32_t c : cps) {
    if (c < 0x80) {
      out += static_cast<char>(c);
    } else if (c < 0x800) {
      out += static_cast<char>(0xC0 | (c >> 6));
      out += static_cast<char>(0x80 | (c & 0x3F));
    } else if (c < 0x10000) {
      out += static_cast<char>(0xE0 | (c >> 12));
      out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (c & 0x3F));
    } else {
      out += static_cast<char>(0xF0 | (c >> 18));
      out += static_cast<char>(0x80 | ((c >> 12) & 0x3F));
      out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (c & 0x3F));
    }
  }
  return out;
}

double shoelace(const std::vector<Point>& ring) {
  double twice = 0.0;
  for (std::size_t i = 0, n = ring.size(); i < n; ++i) {
    const Point& a = ring[i];
    const Point& b = ring[(i + 1) % n];
    twice += a.x * b.y - b.x * a.y;
  }
  return twice / 2.0;
}

double region_area_oracle(const Region& region) {
  double total = 0.0;
  for (const auto& poly : region) {
    total += std::abs(shoelace(poly.outer));
    for (const auto& hole : poly.holes) total -= std::abs(shoelace(hole));
  }
  return total;
}

double segment_distance(Point p, Point a, Point b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

namespace {

bool crosses(const std::vector<Point>& ring, Point p, double tol, bool& near) {
  bool inside = false;
  for (std::size_t i = 0, n = ring.size(), j = n - 1; i < n; j = i++) {
    const Point& a = ring[i];
    const Point& b = ring[j];
    if (segment_distance(p, a, b) <= tol) near = true;
    if ((a.y > p.y) != (b.y > p.y) && p.x < (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x)
      inside = !inside;
  }
  return inside;
}

}  // namespace

bool inside_region_oracle(const Region& region, Point p, double tol) {
  bool inside = false;
  bool near = false;
  for (const auto& poly : region) {
    if (crosses(poly.outer, p, tol, near)) inside = !inside;
    for (const auto& hole : poly.holes)
      if (crosses(hole, p, tol, near)) inside = !inside;
  }
  return inside || near;
}

int field_components(const std::vector<Ball>& balls, double threshold, int resolution) {
  const FieldGrid g = metaball_grid(balls, resolution);
  const int n = g.samples;
  std::vector<int> label(static_cast<std::size_t>(n) * n, 0);
  const auto in = [&](int i, int j) {
    return metaball_field(g.origin + Point{i * g.cell, j * g.cell}, balls) >= threshold;
  };
  int count = 0;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      if (label[j * n + i] || !in(i, j)) continue;
      ++count;
      std::vector<std::pair<int, int>> stack{{i, j}};
      label[j * n + i] = count;
      while (!stack.empty()) {
        auto [x, y] = stack.back();
        stack.pop_back();
        const int dx[] = {1, -1, 0, 0};
        const int dy[] = {0, 0, 1, -1};
        for (int k = 0; k < 4; ++k) {
          const int nx = x + dx[k];
          const int ny = y + dy[k];
          if (nx < 0 || ny < 0 || nx >= n || ny >= n) continue;
          if (label[ny * n + nx] || !in(nx, ny)) continue;
          label[ny * n + nx] = count;
          stack.push_back({nx, ny});
        }
      }
    }
  return count;
}


}  // namespace genii::testing
