#include <algorithm>
#include <cstdio>
#include <set>

#include "cli.hpp"
#include "genii/dataset.hpp"
#include "genii/gene.hpp"
#include "genii/render.hpp"
#include "genii/svg.hpp"
#include "json.hpp"

namespace genii::cli {
namespace {

using nlohmann::json;

const std::set<std::string>& known_fields() {
  static const std::set<std::string> fields{
      "name", "grouping", "mappings", "filters",
      "path.mode", "path.pointCount", "path.rotation", "path.pointDistance", "path.order",
      "path.jumps", "path.points", "path.fromData",
      "envelope.top", "envelope.bottom", "envelope.mode", "envelope.fixedPoint",
      "envelope.fixedChain", "envelope.side", "envelope.perEdge", "envelope.switchOnTurn",
      "envelope.collapse",
      "object.shape", "object.gap", "object.radius", "object.stacking", "object.anchor",
      "object.starAnchor", "object.radial", "object.ringWidth", "object.colour"};
  return fields;
}

struct Axis {
  std::string field;
  std::vector<json> values;
};

struct Plan {
  json base;
  std::vector<Axis> axes;
  std::size_t limit = 100;
};

Plan parse_plan(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw SchemaError("", std::string("malformed plan: ") + e.what());
  }
  std::vector<SchemaIssue> issues;
  Plan plan;
  if (!doc.is_object()) throw SchemaError("", "plan must be an object");
  if (!doc.contains("base") || !doc["base"].is_object())
    issues.push_back({"base", "base gene object required"});
  else
    plan.base = doc["base"];
  if (doc.contains("limit")) {
    if (!doc["limit"].is_number_integer() || doc["limit"].get<std::int64_t>() < 1)
      issues.push_back({"limit", "limit must be an integer >= 1"});
    else
      plan.limit = doc["limit"].get<std::size_t>();
  }
  if (doc.contains("axes")) {
    if (!doc["axes"].is_array()) {
      issues.push_back({"axes", "must be an array"});
    } else {
      for (std::size_t i = 0; i < doc["axes"].size(); ++i) {
        const json& a = doc["axes"][i];
        const std::string p = "axes[" + std::to_string(i) + "]";
        if (!a.is_object() || !a.contains("field") || !a["field"].is_string()) {
          issues.push_back({p + ".field", "axis needs a field name"});
          continue;
        }
        Axis axis{a["field"].get<std::string>(), {}};
        if (!known_fields().contains(axis.field))
          issues.push_back({p + ".field", "unknown gene field '" + axis.field + "'"});
        if (!a.contains("values") || !a["values"].is_array() || a["values"].empty())
          issues.push_back({p + ".values", "axis needs a non-empty list of values"});
        else
          axis.values.assign(a["values"].begin(), a["values"].end());
        plan.axes.push_back(std::move(axis));
      }
    }
  }
  if (!issues.empty()) throw SchemaError(std::move(issues));
  return plan;
}

void set_field(json& doc, const std::string& field, const json& value) {
  json* node = &doc;
  std::size_t start = 0;
  for (;;) {
    const auto dot = field.find('.', start);
    const std::string key = field.substr(start, dot == std::string::npos ? dot : dot - start);
    if (dot == std::string::npos) {
      (*node)[key] = value;
      return;
    }
    if (!node->contains(key) || !(*node)[key].is_object()) (*node)[key] = json::object();
    node = &(*node)[key];
    start = dot + 1;
  }
}

std::string numbered(std::size_t i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%03zu", i);
  return buf;
}

}  // namespace

GalleryReport run_gallery(const std::string& plan_text, const std::string& data_text,
                          const std::filesystem::path& out_dir, double dpi, std::ostream& err) {
  const Plan plan = parse_plan(plan_text);
  const ParsedDataset data = parse_dataset(data_text);

  GalleryReport report;
  std::set<std::string> seen;
  std::string figures;
  std::vector<std::size_t> digits(plan.axes.size(), 0);
  std::size_t variant = 0;

  bool more = true;
  while (more && seen.size() < plan.limit) {
    json doc = plan.base;
    std::string caption;
    for (std::size_t a = 0; a < plan.axes.size(); ++a) {
      const json& v = plan.axes[a].values[digits[a]];
      set_field(doc, plan.axes[a].field, v);
      if (!caption.empty()) caption += ", ";
      caption += plan.axes[a].field + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
    }

    // Odometer step, last axis fastest.
    more = false;
    for (std::size_t a = plan.axes.size(); a-- > 0;) {
      if (++digits[a] < plan.axes[a].values.size()) {
        more = true;
        break;
      }
      digits[a] = 0;
    }

    const std::string raw = doc.dump();
    std::optional<Gene> gene;
    std::string key = raw;
    try {
      gene = parse_gene(raw);
      key = serialize_gene(*gene);
    } catch (const SchemaError&) {
    }
    if (!seen.insert(key).second) {
      ++report.duplicates;
      continue;
    }
    const std::size_t index = ++variant;
    const std::string file = numbered(index) + ".svg";
    try {
      if (!gene) parse_gene(raw);  // rethrows the schema problem
      RenderOptions opts;
      opts.dpi = dpi;
      write_atomically(out_dir / file, render(*gene, data.dataset, opts).svg);
      ++report.rendered;
      figures += "<figure><img src=\"" + file + "\" alt=\"" + svg::escape(caption) +
                 "\"><figcaption>" + numbered(index) + ": " + svg::escape(caption) +
                 "</figcaption></figure>\n";
    } catch (const Error& e) {
      ++report.failed;
      err << "variant " << numbered(index) << " (" << caption << ") failed: " << e.what() << "\n";
      figures += "<figure class=\"failed\"><figcaption>" + numbered(index) + ": " +
                 svg::escape(caption) + " failed: " + svg::escape(e.what()) +
                 "</figcaption></figure>\n";
    }
  }

  report.truncated = more;

  write_atomically(out_dir / "index.html",
                   "<!DOCTYPE html>\n<html><head><meta charset=\"utf-8\"><title>genii gallery</title>\n"
                   "<style>figure{display:inline-block;margin:8px}img{width:160px}"
                   ".failed{color:#b00}</style></head>\n<body>\n" +
                       figures + "</body></html>\n");
  return report;
}

}  // namespace genii::cli
