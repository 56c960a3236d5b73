#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "genii/geometry.hpp"

namespace genii {

enum class EdgeKind { draw, jump };

struct Edge {
  std::size_t from_index = 0;
  std::size_t to_index = 1;
  EdgeKind kind = EdgeKind::draw;
  // Zero-length draw edge. It keeps its slot so data indices stay aligned
  // with edges, but no mark is placed on it.
  bool degenerate = false;

  bool is_jump() const noexcept { return kind == EdgeKind::jump; }
  bool operator==(const Edge&) const = default;
};

// The skeleton of a design: vertices v0..v(n-1) joined by n-1 edges, each of
// which either draws or jumps. Immutable once built.
class FlowPath {
 public:
  // Builds draw edges between consecutive vertices, then flags `jumps`.
  // Throws Error(EmptyPath) for no vertices, Error(IndexOutOfRange) for a
  // jump index that does not name an edge.
  explicit FlowPath(std::vector<Point> vertices, std::span<const std::size_t> jumps = {});

  const std::vector<Point>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  std::size_t entrance() const noexcept { return 0; }
  std::size_t exit() const noexcept { return vertices_.size() - 1; }

  Point vertex(std::size_t i) const { return vertices_.at(i); }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }
  Point edge_start(std::size_t i) const { return vertices_.at(edges_.at(i).from_index); }
  Point edge_end(std::size_t i) const { return vertices_.at(edges_.at(i).to_index); }

  // Indices of edges that carry geometry, in walk order. Degenerate edges are
  // included; jump edges are not.
  std::vector<std::size_t> draw_edges() const;

  // Copy with every vertex replaced by f(vertex); edge kinds are preserved.
  template <typename F>
  FlowPath transformed(F&& f) const {
    FlowPath out = *this;
    for (auto& v : out.vertices_) v = f(v);
    out.refresh_degenerate();
    return out;
  }

  bool operator==(const FlowPath&) const = default;

 private:
  void refresh_degenerate();

  std::vector<Point> vertices_;
  std::vector<Edge> edges_;
};

// Drops absent entries and clamps every coordinate into [0, 1]. Non-finite
// coordinates clamp too (NaN maps to 0). Throws Error(EmptyPath) when nothing
// remains.
FlowPath normalize_path(std::span<const std::optional<Point>> raw,
                        std::span<const std::size_t> jumps = {});
FlowPath normalize_path(const FlowPath& path);

// Edge direction rotated a quarter turn counter-clockwise, unit length.
// Throws Error(DegenerateEdge) when a == b.
Point edge_normal(Point a, Point b);

struct WalkStep {
  enum class Kind { vertex, edge } kind;
  std::size_t index;
  bool jump = false;

  bool operator==(const WalkStep&) const = default;
};

// v0, e0, v1, e1, ..., v(n-1).
std::vector<WalkStep> walk(const FlowPath& path);

}  // namespace genii
