#include "genii/render.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "genii/filters.hpp"
#include "genii/metaball.hpp"
#include "genii/path_generators.hpp"
#include "genii/polygon_ops.hpp"
#include "genii/svg.hpp"

namespace genii {
namespace {

template <typename F>
auto run_stage(const char* name, F&& f) {
  try {
    return f();
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    throw Error(e.code(), std::string("stage ") + name + ": " + e.what());
  }
}

double as_number(const Attribute& a) {
  if (const double* d = std::get_if<double>(&a)) return *d;
  return 0.0;
}

struct Resolver {
  const Gene& gene;
  const Dataset& ds;
  std::vector<std::string>* warnings;

  Colour colour(std::size_t index, std::size_t group, std::size_t ordinal) const {
    if (const MappingSpec* m = gene.mapping(Channel::colour))
      return std::get<Colour>(resolve(*m, ds, index, ordinal));
    if (gene.mark.colour) return parse_colour(*gene.mark.colour);
    const auto& palette = default_palette();
    return palette[group % palette.size()];
  }

  double fraction(const Category& c) const {
    return scale_height(c.value, c.range, 1.0, warnings);
  }

  // Height channel as a fraction of the envelope reach.
  double height(std::size_t index) const {
    const Category& c = ds.categories[index];
    const MappingSpec* m = gene.mapping(Channel::mark_height);
    if (!m || m->source == Source::value_over_range) return fraction(c);
    return as_number(resolve(*m, ds, index));
  }

  void fill_common(Datum& d, std::size_t index, std::size_t slot, std::size_t ordinal) const {
    const std::size_t group = slot / std::max<std::size_t>(gene.grouping, 1);
    d.colour = colour(index, group, ordinal);
    if (const MappingSpec* m = gene.mapping(Channel::mark_width))
      d.width = as_number(resolve(*m, ds, index));
    if (const MappingSpec* m = gene.mapping(Channel::angle))
      d.value_fraction = as_number(resolve(*m, ds, index)) / 360.0;
    if (const MappingSpec* m = gene.mapping(Channel::text))
      d.text = std::get<std::string>(resolve(*m, ds, index, ordinal));
  }
};

bool is_pair_mapping(const MappingSpec* m) { return m && m->source != Source::constant; }

// Runs `op` on the marks of each group separately, keeping group order.
template <typename Op>
std::vector<MarkGeometry> per_group(const std::vector<MarkGeometry>& marks, Op op) {
  std::vector<std::size_t> order;
  std::map<std::size_t, std::vector<MarkGeometry>> groups;
  for (const auto& m : marks) {
    if (!groups.contains(m.group)) order.push_back(m.group);
    groups[m.group].push_back(m);
  }
  std::vector<MarkGeometry> out;
  for (std::size_t g : order) {
    for (auto& m : op(groups[g])) {
      m.group = g;
      out.push_back(std::move(m));
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) out[i].z_order = i;
  return out;
}

CombineMode combine_mode(FilterKind k) {
  switch (k) {
    case FilterKind::cutout: return CombineMode::cutout;
    case FilterKind::union_: return CombineMode::union_;
    case FilterKind::intersect: return CombineMode::intersect;
    case FilterKind::subtract: return CombineMode::subtract;
    default: return CombineMode::overlap;
  }
}

std::vector<MarkGeometry> apply_filter(std::vector<MarkGeometry> marks, const FilterSpec& f) {
  if (is_combine(f.kind)) {
    const CombineMode mode = combine_mode(f.kind);
    return per_group(marks, [&](const std::vector<MarkGeometry>& g) { return combine(g, mode); });
  }
  switch (f.kind) {
    case FilterKind::metaball:
      return per_group(marks, [&](const std::vector<MarkGeometry>& g) {
        return metaball_marks(g, f.threshold, f.grid);
      });
    case FilterKind::round_corners: return round_corners(std::move(marks), f.radius);
    case FilterKind::smooth: return smooth(std::move(marks), f.iterations);
    default: return apply_style(std::move(marks), f);
  }
}

}  // namespace

Viewport viewport_for(const Dataset& dataset, double dpi) {
  return {to_pixels(dataset.width_cm, dpi), to_pixels(dataset.height_cm, dpi),
          to_pixels(dataset.padding_cm, dpi)};
}

std::vector<std::string> subpixel_audit(const std::vector<MarkGeometry>& marks,
                                        const Viewport& viewport) {
  std::vector<std::string> out;
  const double sx = viewport.width_px - 2 * viewport.padding_px;
  const double sy = viewport.height_px - 2 * viewport.padding_px;
  for (const auto& m : marks) {
    if (m.text || (m.area.empty() && !m.lines.empty())) continue;
    const Box& b = m.placed_bounds;
    const double w = b.empty() ? 0.0 : b.width() * sx;
    const double h = b.empty() ? 0.0 : b.height() * sy;
    if (w < 1.0 || h < 1.0)
      out.push_back("mark for datum " + std::to_string(m.datum_index) + " on edge " +
                    std::to_string(m.edge_index) + " is smaller than a pixel (" +
                    svg::number(w) + " x " + svg::number(h) + " px)");
  }
  return out;
}

std::vector<Datum> resolve_data(const Gene& gene, const Dataset& ds,
                                std::vector<std::string>* warnings) {
  const Resolver r{gene, ds, warnings};
  const auto& cats = ds.categories;
  std::vector<Datum> out;
  const MappingSpec* position = gene.mapping(Channel::mark_position);

  if (is_pair_mapping(position)) {
    // Range chart: consecutive categories are (start, end) of one mark.
    if (cats.size() % 2 != 0 && warnings)
      warnings->push_back("range data has an odd number of categories; last one ignored");
    for (std::size_t k = 0; k + 1 < cats.size(); k += 2) {
      Datum d;
      d.index = k;
      const double start = r.fraction(cats[k]);
      const double end = r.fraction(cats[k + 1]);
      d.start = std::min(start, end);
      d.height = std::abs(end - start);
      d.value_fraction = d.height;
      r.fill_common(d, k, k / 2, k / 2);
      out.push_back(std::move(d));
    }
    return out;
  }

  const double start = position ? position->constant : 0.0;
  const bool stacked = gene.mark.stacking && !ds.series.empty();
  for (std::size_t i = 0; i < cats.size(); ++i) {
    if (stacked) {
      std::vector<double> values{cats[i].value};
      for (const auto& s : ds.series)
        if (i < s.categories.size()) values.push_back(s.categories[i].value);
      const auto spans = stack_offsets(values, cats[i].range, warnings);
      for (std::size_t j = 0; j < spans.size(); ++j) {
        Datum d;
        d.index = i;
        d.slot = i;
        d.start = start + spans[j].start;
        d.height = spans[j].end - spans[j].start;
        d.value_fraction = d.height;
        r.fill_common(d, i, i, j);
        out.push_back(std::move(d));
      }
      continue;
    }
    Datum d;
    d.index = i;
    d.start = start;
    d.height = r.height(i);
    d.value_fraction = std::clamp(cats[i].value / cats[i].range, 0.0, 1.0);
    if ((gene.mark.shape == Shape::circle) && gene.mapping(Channel::mark_height))
      d.radius = d.height;
    r.fill_common(d, i, i, i / std::max<std::size_t>(gene.grouping, 1));
    out.push_back(std::move(d));
  }
  return out;
}

Scene build_scene(const Gene& gene, const Dataset& dataset, const RenderOptions& options) {
  const Seed seed = options.seed_name ? Seed::from_name(*options.seed_name) : gene.seed();
  std::vector<std::string> warnings;

  FlowPath path = run_stage("path", [&] {
    return gene.path_from_data ? data_driven_path(dataset, *gene.path_from_data)
                               : generate(gene.path, seed);
  });
  Envelope envelope = run_stage("envelope", [&] { return build_envelope(path, gene.envelope); });
  const Region clip = gene.path_from_data
                          ? polygon::unit_square()
                          : polygon::intersect(envelope.region, polygon::unit_square());

  std::vector<MarkGeometry> marks = run_stage("marks", [&] {
    std::vector<MarkGeometry> placed;
    if (gene.path_from_data) {
      // Scatter marks sit on the data points themselves.
      const auto strategy = *gene.path_from_data == ScatterMode::scatter_x_axis
                                ? ScatterStrategy::vertical_from_axis
                                : ScatterStrategy::path_through_data;
      placed = scatter_place(scatter_points(dataset), strategy, gene.mark.radius.value_or(0.03)).marks;
      const Resolver r{gene, dataset, &warnings};
      for (auto& m : placed) {
        m.datum_index = 2 * m.datum_index;
        m.group = m.edge_index / std::max<std::size_t>(gene.grouping, 1);
        m.style.fill = r.colour(m.datum_index, m.group, m.group);
      }
    } else {
      const auto data = resolve_data(gene, dataset, &warnings);
      Placement p = place_marks(path, envelope, gene.mark, data, gene.grouping);
      warnings.insert(warnings.end(), p.warnings.begin(), p.warnings.end());
      placed = std::move(p.marks);
    }
    if (const MappingSpec* fp = gene.mapping(Channel::filter_param)) {
      for (auto& m : placed)
        m.style.opacity = std::clamp(as_number(resolve(*fp, dataset, m.datum_index)), 0.0, 1.0);
    }
    return placed;
  });

  marks = run_stage("filters", [&] {
    for (const auto& f : gene.filters) marks = apply_filter(std::move(marks), f);
    return std::move(marks);
  });

  marks = run_stage("clip", [&] {
    std::vector<MarkGeometry> kept;
    for (auto& m : marks) {
      if (!m.area.empty()) m.area = polygon::intersect(m.area, clip);
      if (!m.lines.empty()) m.lines = polygon::clip_polylines(m.lines, clip);
      if (m.text && !polygon::contains(clip, m.text->anchor, 1e-12)) m.text.reset();
      kept.push_back(std::move(m));
    }
    return kept;
  });

  return Scene{std::move(path), std::move(envelope), clip, std::move(marks), std::move(warnings)};
}

RenderResult render(const Gene& gene, const Dataset& dataset, const RenderOptions& options) {
  if (!(options.dpi > 0.0) || !std::isfinite(options.dpi))
    throw Error(ErrorCode::Unrenderable, "dpi must be a positive number");
  if (options.background) parse_colour(*options.background);
  RenderResult out{"", build_scene(gene, dataset, options), {}};
  out.warnings = out.scene.warnings;
  for (auto& w : subpixel_audit(out.scene.marks, viewport_for(dataset, options.dpi)))
    out.warnings.push_back(std::move(w));
  out.svg = emit_svg(out.scene, gene, dataset, options);
  return out;
}

namespace {

// Collects gradient and filter definitions, one id per distinct body.
class Defs {
 public:
  std::string paint(const Paint& p, const svg::Affine& affine) {
    if (const Colour* c = std::get_if<Colour>(&p)) return c->hex();
    std::string body;
    std::string tag;
    const Gradient* g = nullptr;
    if (const auto* lin = std::get_if<LinearGradientPaint>(&p)) {
      tag = "linearGradient";
      const double rad = lin->angle_deg * std::numbers::pi / 180.0;
      Point dir = affine.linear({std::cos(rad), std::sin(rad)});
      const double len = length(dir);
      dir = len > 0 ? dir / len : Point{0, -1};
      body = " x1=\"" + svg::number(0.5 - 0.5 * dir.x) + "\" y1=\"" + svg::number(0.5 - 0.5 * dir.y) +
             "\" x2=\"" + svg::number(0.5 + 0.5 * dir.x) + "\" y2=\"" + svg::number(0.5 + 0.5 * dir.y) +
             "\">";
      g = &lin->gradient;
    } else {
      tag = "radialGradient";
      body = " cx=\"0.5\" cy=\"0.5\" r=\"0.5\">";
      g = &std::get<RadialGradientPaint>(p).gradient;
    }
    for (const auto& s : g->stops)
      body += "<stop offset=\"" + svg::number(s.offset) + "\" stop-color=\"" + s.colour.hex() + "\"/>";
    body += "</" + tag + ">";
    return "url(#" + intern("<" + tag, body, "g") + ")";
  }

  std::string effect(const Effect& e) {
    const std::string sd = svg::number(e.amount);
    std::string body;
    if (e.kind == Effect::Kind::blur) {
      body = "><feGaussianBlur stdDeviation=\"" + sd + "\"/></filter>";
    } else {
      body = " x=\"-50%\" y=\"-50%\" width=\"200%\" height=\"200%\">"
             "<feGaussianBlur in=\"SourceAlpha\" stdDeviation=\"" + sd + "\"/>"
             "<feOffset dx=\"" + sd + "\" dy=\"" + sd + "\" result=\"shade\"/>"
             "<feMerge><feMergeNode in=\"shade\"/><feMergeNode in=\"SourceGraphic\"/></feMerge>"
             "</filter>";
    }
    return "url(#" + intern("<filter", body, "fx") + ")";
  }

  std::string str() const {
    if (entries_.empty()) return "";
    std::string out = "<defs>\n";
    for (const auto& e : entries_) out += e + "\n";
    return out + "</defs>\n";
  }

 private:
  std::string intern(const std::string& open, const std::string& body, const std::string& prefix) {
    const std::string key = open + body;
    if (auto it = ids_.find(key); it != ids_.end()) return it->second;
    const std::string id = prefix + std::to_string(count_[prefix]++);
    ids_.emplace(key, id);
    entries_.push_back(open + " id=\"" + id + "\"" + body);
    return id;
  }

  std::map<std::string, std::string> ids_;
  std::map<std::string, int> count_;
  std::vector<std::string> entries_;
};

std::string style_attrs(const Style& s, Defs& defs, const svg::Affine& affine, bool line) {
  std::string out;
  if (line) {
    std::string colour = "#000000";
    if (s.stroke) colour = s.stroke->hex();
    else if (s.fill && std::holds_alternative<Colour>(*s.fill)) colour = std::get<Colour>(*s.fill).hex();
    out += " fill=\"none\" stroke=\"" + colour + "\" stroke-width=\"" + svg::number(s.stroke_width) + "\"";
  } else {
    out += " fill=\"" + (s.fill ? defs.paint(*s.fill, affine) : std::string("none")) + "\"";
    if (s.stroke)
      out += " stroke=\"" + s.stroke->hex() + "\" stroke-width=\"" + svg::number(s.stroke_width) + "\"";
  }
  if (s.opacity < 1.0) out += " opacity=\"" + svg::number(s.opacity) + "\"";
  if (s.effect) out += " filter=\"" + defs.effect(*s.effect) + "\"";
  return out;
}

std::string mark_attrs(const MarkGeometry& m) {
  std::string out = " data-shape=\"" + std::string(to_string(m.shape)) + "\" data-edge=\"" +
                    std::to_string(m.edge_index) + "\" data-datum=\"" +
                    std::to_string(m.datum_index) + "\"";
  if (m.span)
    out += " data-start-deg=\"" + svg::number(m.span->start_deg) + "\" data-sweep-deg=\"" +
           svg::number(m.span->sweep()) + "\"";
  return out;
}

std::string filter_names(const Gene& gene) {
  if (gene.filters.empty()) return "none";
  std::string out;
  for (const auto& f : gene.filters) {
    if (!out.empty()) out += ", ";
    out += to_string(f.kind);
  }
  return out;
}

}  // namespace

std::string emit_svg(const Scene& scene, const Gene& gene, const Dataset& dataset,
                     const RenderOptions& options) {
  const Viewport vp = viewport_for(dataset, options.dpi);
  const svg::Affine affine{vp.width_px, vp.height_px, vp.padding_px};
  const std::string w = svg::number(vp.width_px);
  const std::string h = svg::number(vp.height_px);

  std::size_t jumps = 0;
  for (const auto& e : scene.path.edges()) jumps += e.kind == EdgeKind::jump;

  std::string head = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  head += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + w +
          "\" height=\"" + h + "\" viewBox=\"0 0 " + w + " " + h + "\">\n";
  head += "<!-- genii:gene\n" + svg::comment_safe(serialize_gene(gene)) + "-->\n";
  head += "<!-- stage 1 path: " + std::to_string(scene.path.size()) + " vertices, " +
          std::to_string(scene.path.edges().size()) + " edges, " + std::to_string(jumps) +
          " jumps -->\n";
  head += "<!-- stage 2 envelope: " + std::string(to_string(scene.envelope.spec.mode)) +
          ", top " + svg::number(scene.envelope.spec.top_extent) + ", bottom " +
          svg::number(scene.envelope.spec.bottom_extent) + " -->\n";
  head += "<!-- stage 3 marks: " + std::to_string(scene.marks.size()) + " placed -->\n";
  head += "<!-- stage 4 filters: " + filter_names(gene) + " -->\n";
  head += "<!-- stage 5 clip: envelope within viewport -->\n";

  Defs defs;
  std::string body;
  if (options.background)
    body += "<rect x=\"0\" y=\"0\" width=\"" + w + "\" height=\"" + h + "\" fill=\"" +
            parse_colour(*options.background).hex() + "\"/>\n";

  if (options.emit_debug_path && scene.path.size() > 0) {
    const Point p0 = affine.apply(scene.path.vertex(0));
    std::string d = "M" + svg::number(p0.x) + " " + svg::number(p0.y);
    for (const auto& e : scene.path.edges()) {
      const Point p = affine.apply(scene.path.vertex(e.to_index));
      d += (e.kind == EdgeKind::jump ? " M" : " L") + svg::number(p.x) + " " + svg::number(p.y);
    }
    body += "<path class=\"genii-skeleton\" d=\"" + d +
            "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
  }

  std::optional<std::size_t> open_group;
  for (const auto& m : scene.marks) {
    if (m.empty()) continue;
    if (open_group != m.group) {
      if (open_group) body += "</g>\n";
      body += "<g data-group=\"" + std::to_string(m.group) + "\">\n";
      open_group = m.group;
    }
    if (!m.area.empty())
      body += "<path d=\"" + svg::path_data(m.area, affine) + "\" fill-rule=\"evenodd\"" +
              style_attrs(m.style, defs, affine, false) + mark_attrs(m) + "/>\n";
    for (const auto& line : m.lines)
      body += "<path d=\"" + svg::polyline_data(line, affine) + "\"" +
              style_attrs(m.style, defs, affine, true) + mark_attrs(m) + "/>\n";
    if (m.text) {
      const Point a = affine.apply(m.text->anchor);
      body += "<text x=\"" + svg::number(a.x) + "\" y=\"" + svg::number(a.y) + "\" font-size=\"" +
              svg::number(m.text->size * affine.sy()) +
              "\" text-anchor=\"middle\" dominant-baseline=\"middle\"" +
              style_attrs(m.style, defs, affine, false) + mark_attrs(m) + ">" +
              svg::escape(m.text->content) + "</text>\n";
    }
  }
  if (open_group) body += "</g>\n";

  return head + defs.str() + body + "</svg>\n";
}

std::optional<Gene> extract_gene(std::string_view doc) {
  constexpr std::string_view open = "<!-- genii:gene\n";
  const auto start = doc.find(open);
  if (start == std::string_view::npos) return std::nullopt;
  const auto end = doc.find("-->", start + open.size());
  if (end == std::string_view::npos) return std::nullopt;
  try {
    return parse_gene(doc.substr(start + open.size(), end - start - open.size()));
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace genii
