#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "genii/dataset.hpp"
#include "genii/envelope.hpp"
#include "genii/gene.hpp"
#include "genii/marks.hpp"
#include "genii/path.hpp"

namespace genii {

struct RenderOptions {
  double dpi = 96.0;
  std::optional<std::string> background;  // colour text; transparent when absent
  bool emit_debug_path = false;           // draw the flowpath skeleton
  // Seeds the stochastic parts from this name instead of the gene's.
  std::optional<std::string> seed_name;
};

struct Viewport {
  double width_px = 0.0;
  double height_px = 0.0;
  double padding_px = 0.0;
};

inline double to_pixels(double length_cm, double dpi) { return length_cm * dpi / 2.54; }

Viewport viewport_for(const Dataset& dataset, double dpi);

// One warning per mark whose pixel bounding box has a side under 1 px. Text
// and open polylines are not audited.
std::vector<std::string> subpixel_audit(const std::vector<MarkGeometry>& marks,
                                        const Viewport& viewport);

// Everything the pipeline produced before emission, in unit space.
struct Scene {
  FlowPath path;
  Envelope envelope;
  Region clip;  // envelope region intersected with the unit square
  std::vector<MarkGeometry> marks;
  std::vector<std::string> warnings;
};

// Stages 1 to 5: path, envelope, marks with resolved data, filters, clip.
// Errors from a stage are rethrown with the stage named in the message;
// SchemaError passes through untouched.
Scene build_scene(const Gene& gene, const Dataset& dataset, const RenderOptions& options = {});

// Data resolved to per-mark attributes, exposed for the chart recreations.
std::vector<Datum> resolve_data(const Gene& gene, const Dataset& dataset,
                                std::vector<std::string>* warnings = nullptr);

struct RenderResult {
  std::string svg;
  Scene scene;
  std::vector<std::string> warnings;
};

// Throws Error(Unrenderable) when options are out of range.
RenderResult render(const Gene& gene, const Dataset& dataset, const RenderOptions& options = {});

// Emits a standalone SVG 1.1 document for a built scene.
std::string emit_svg(const Scene& scene, const Gene& gene, const Dataset& dataset,
                     const RenderOptions& options);

// Recovers the gene embedded in a rendered document, if any.
std::optional<Gene> extract_gene(std::string_view svg_document);

}  // namespace genii
