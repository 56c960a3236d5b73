#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "genii/geometry.hpp"
#include "genii/path.hpp"

namespace genii {

enum class EnvelopeMode { parallel, fixed_point };
enum class SidePolicy { center, top_only, bottom_only, alternate, per_edge };
enum class Alignment { on_path_above, on_path_below, centered };
enum class Chain { top, bottom };

std::string_view to_string(EnvelopeMode v);
std::string_view to_string(SidePolicy v);
std::string_view to_string(Alignment v);
std::string_view to_string(Chain v);
std::optional<EnvelopeMode> envelope_mode_from_string(std::string_view s);
std::optional<SidePolicy> side_policy_from_string(std::string_view s);
std::optional<Alignment> alignment_from_string(std::string_view s);
std::optional<Chain> chain_from_string(std::string_view s);

struct EnvelopeSpec {
  double top_extent = 0.45;
  double bottom_extent = 0.45;
  EnvelopeMode mode = EnvelopeMode::parallel;
  // Required in fixed_point mode: every vertex of `fixed_chain` sits here.
  std::optional<Point> fixed_point;
  Chain fixed_chain = Chain::bottom;
  SidePolicy side = SidePolicy::center;
  std::vector<Alignment> per_edge;
  bool switch_on_turn = false;
  // Both extents may be zero only when this is set.
  bool collapse = false;

  bool operator==(const EnvelopeSpec&) const = default;
};

// Engine defaults for a path mode when the gene leaves extents out.
EnvelopeSpec default_envelope_for(std::string_view path_mode);

struct Envelope {
  EnvelopeSpec spec;
  std::vector<Point> top;     // one per path vertex
  std::vector<Point> bottom;  // one per path vertex
  std::vector<Point> normals; // one per edge; zero for degenerate edges
  // Union of the per-edge bands; marks are clipped against this.
  Region region;
  // The band of each draw edge, empty for jump and degenerate edges.
  std::vector<Region> edge_regions;
};

// Throws Error(DegeneratePath) when the path has draw edges but all of them
// are zero length; Error(SchemaError) when fixed_point mode has no point.
Envelope build_envelope(const FlowPath& path, const EnvelopeSpec& spec);

// Where a mark sits on one edge. The mark occupies base + s * reach for s in
// a sub-range of [0, 1] (or [-1/2, 1/2] when centered), interpolated between
// the two ends of the edge.
struct EdgeFrame {
  std::size_t edge_index = 0;
  Alignment alignment = Alignment::on_path_above;
  Point base_a;
  Point base_b;
  Point reach_a;
  Point reach_b;
  Point normal;
  // Positive when marks grow along +normal, negative along -normal.
  double signed_extent = 0.0;

  double length() const { return distance(base_a, base_b); }
  Point direction() const { return (base_b - base_a) / length(); }
  Point midpoint() const { return lerp(base_a, base_b, 0.5); }
  Point mid_reach() const { return (reach_a + reach_b) * 0.5; }
};

// Alignment the side policy assigns to an edge, including the flip applied by
// switch_on_turn when the edge normal points downward.
Alignment alignment_for_edge(const Envelope& envelope, std::size_t edge_index);

// Throws Error(JumpEdge) for a jump edge and Error(DegenerateEdge) for a
// zero-length one.
EdgeFrame baseline_for_edge(const Envelope& envelope, const FlowPath& path,
                            std::size_t edge_index, Alignment alignment);

// Intersects geometry with the envelope region.
Region clip_to_envelope(const Region& geometry, const Envelope& envelope);
std::vector<Ring> clip_to_envelope(const std::vector<Ring>& polylines, const Envelope& envelope);

}  // namespace genii
