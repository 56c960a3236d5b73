#include "genii/path.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "genii/errors.hpp"

namespace genii {
namespace {

double clamp_unit(double v) {
  if (std::isnan(v)) return 0.0;
  return std::clamp(v, 0.0, 1.0);
}

}  // namespace

FlowPath::FlowPath(std::vector<Point> vertices, std::span<const std::size_t> jumps)
    : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw Error(ErrorCode::EmptyPath, "path has no vertices");
  edges_.reserve(vertices_.size() - 1);
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i)
    edges_.push_back(Edge{i, i + 1, EdgeKind::draw, false});
  for (std::size_t j : jumps) {
    if (j >= edges_.size())
      throw Error(ErrorCode::IndexOutOfRange,
                  "jump edge " + std::to_string(j) + " out of range (path has " +
                      std::to_string(edges_.size()) + " edges)");
    edges_[j].kind = EdgeKind::jump;
  }
  refresh_degenerate();
}

void FlowPath::refresh_degenerate() {
  for (auto& e : edges_)
    e.degenerate = !e.is_jump() && vertices_[e.from_index] == vertices_[e.to_index];
}

std::vector<std::size_t> FlowPath::draw_edges() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (!edges_[i].is_jump()) out.push_back(i);
  return out;
}

FlowPath normalize_path(std::span<const std::optional<Point>> raw,
                        std::span<const std::size_t> jumps) {
  std::vector<Point> kept;
  kept.reserve(raw.size());
  for (const auto& p : raw)
    if (p) kept.push_back({clamp_unit(p->x), clamp_unit(p->y)});
  if (kept.empty()) throw Error(ErrorCode::EmptyPath, "no vertices remain after normalization");
  return FlowPath(std::move(kept), jumps);
}

FlowPath normalize_path(const FlowPath& path) {
  return path.transformed([](Point p) { return Point{clamp_unit(p.x), clamp_unit(p.y)}; });
}

Point edge_normal(Point a, Point b) {
  const Point d = b - a;
  const double len = length(d);
  if (len == 0.0) throw Error(ErrorCode::DegenerateEdge, "edge endpoints coincide");
  return perp_ccw(d / len);
}

std::vector<WalkStep> walk(const FlowPath& path) {
  std::vector<WalkStep> steps;
  steps.reserve(path.size() * 2);
  const auto& edges = path.edges();
  for (std::size_t i = 0; i < path.size(); ++i) {
    steps.push_back({WalkStep::Kind::vertex, i, false});
    if (i < edges.size()) steps.push_back({WalkStep::Kind::edge, i, edges[i].is_jump()});
  }
  return steps;
}

}  // namespace genii
