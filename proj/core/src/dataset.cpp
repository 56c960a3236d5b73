#include "genii/dataset.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include "genii/errors.hpp"
#include "genii/marks.hpp"
#include "genii/seed.hpp"
#include "json.hpp"

namespace genii {
namespace {

using nlohmann::json;

constexpr std::array<std::pair<Channel, std::string_view>, 8> kChannels{{
    {Channel::mark_height, "mark_height"},
    {Channel::mark_width, "mark_width"},
    {Channel::mark_position, "mark_position"},
    {Channel::vertex_position, "vertex_position"},
    {Channel::colour, "colour"},
    {Channel::angle, "angle"},
    {Channel::text, "text"},
    {Channel::filter_param, "filter_param"},
}};

constexpr std::array<std::pair<Source, std::string_view>, 5> kSources{{
    {Source::value, "value"},
    {Source::value_over_range, "value_over_range"},
    {Source::name, "name"},
    {Source::index, "index"},
    {Source::constant, "constant"},
}};

class Checker {
 public:
  std::vector<SchemaIssue> issues;
  std::vector<std::string> warnings;

  void fail(std::string path, std::string message) {
    issues.push_back({std::move(path), std::move(message)});
  }

  std::optional<double> number(const json& obj, const std::string& key, const std::string& path,
                               bool required = true) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
      if (required) fail(path, "missing field");
      return std::nullopt;
    }
    if (!it->is_number()) {
      fail(path, "must be a number");
      return std::nullopt;
    }
    const double v = it->get<double>();
    if (!std::isfinite(v)) {
      fail(path, "must be finite");
      return std::nullopt;
    }
    return v;
  }

  void unknown_fields(const json& obj, std::initializer_list<std::string_view> known,
                      const std::string& path) {
    for (const auto& [key, _] : obj.items()) {
      if (std::find(known.begin(), known.end(), key) == known.end())
        warnings.push_back("ignoring unknown field " + (path.empty() ? key : path + "." + key));
    }
  }

  std::vector<Category> categories(const json& arr, const std::string& path) {
    std::vector<Category> out;
    if (!arr.is_array()) {
      fail(path, "must be an array");
      return out;
    }
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string p = path + "[" + std::to_string(i) + "]";
      const json& c = arr[i];
      if (!c.is_object()) {
        fail(p, "must be an object");
        continue;
      }
      unknown_fields(c, {"name", "value", "range"}, p);
      Category cat;
      const auto name = c.find("name");
      if (name == c.end()) fail(p + ".name", "missing field");
      else if (!name->is_string()) fail(p + ".name", "must be a string");
      else cat.name = name->get<std::string>();
      if (auto v = number(c, "value", p + ".value")) cat.value = *v;
      if (auto r = number(c, "range", p + ".range")) {
        if (*r <= 0) fail(p + ".range", "range must be > 0");
        cat.range = *r;
      }
      out.push_back(std::move(cat));
    }
    return out;
  }
};

json category_json(const Category& c) {
  return json{{"name", c.name}, {"value", c.value}, {"range", c.range}};
}

std::string format_number(double v) { return json(v).dump(); }

}  // namespace

std::string_view to_string(Channel c) {
  for (const auto& [k, n] : kChannels)
    if (k == c) return n;
  return "unknown";
}
std::string_view to_string(Source s) {
  for (const auto& [k, n] : kSources)
    if (k == s) return n;
  return "unknown";
}
std::optional<Channel> channel_from_string(std::string_view s) {
  for (const auto& [k, n] : kChannels)
    if (n == s) return k;
  return std::nullopt;
}
std::optional<Source> source_from_string(std::string_view s) {
  for (const auto& [k, n] : kSources)
    if (n == s) return k;
  return std::nullopt;
}

ParsedDataset parse_dataset(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("", "document must be an object");

  Checker check;
  check.unknown_fields(doc, {"categories", "width", "height", "padding", "series"}, "");
  ParsedDataset out;
  Dataset& ds = out.dataset;

  const auto cats = doc.find("categories");
  if (cats == doc.end()) check.fail("categories", "missing field");
  else ds.categories = check.categories(*cats, "categories");

  const auto w = check.number(doc, "width", "width");
  const auto h = check.number(doc, "height", "height");
  const auto pad = check.number(doc, "padding", "padding", false);
  if (w) {
    if (*w <= 0) check.fail("width", "width must be > 0");
    ds.width_cm = *w;
  }
  if (h) {
    if (*h <= 0) check.fail("height", "height must be > 0");
    ds.height_cm = *h;
  }
  if (pad) {
    ds.padding_cm = *pad;
    if (*pad < 0) check.fail("padding", "padding must be >= 0");
    else if (w && h && *pad >= std::min(*w, *h) / 2)
      check.fail("padding", "padding must be less than half the smaller side");
  }

  if (const auto series = doc.find("series"); series != doc.end()) {
    if (!series->is_array()) {
      check.fail("series", "must be an array");
    } else {
      for (std::size_t i = 0; i < series->size(); ++i) {
        const std::string p = "series[" + std::to_string(i) + "]";
        const json& s = (*series)[i];
        if (!s.is_object()) {
          check.fail(p, "must be an object");
          continue;
        }
        check.unknown_fields(s, {"name", "categories"}, p);
        Series entry;
        if (const auto n = s.find("name"); n != s.end()) {
          if (n->is_string()) entry.name = n->get<std::string>();
          else check.fail(p + ".name", "must be a string");
        }
        if (const auto c = s.find("categories"); c != s.end())
          entry.categories = check.categories(*c, p + ".categories");
        else
          check.fail(p + ".categories", "missing field");
        ds.series.push_back(std::move(entry));
      }
    }
  }

  if (!check.issues.empty()) throw SchemaError(std::move(check.issues));
  out.warnings = std::move(check.warnings);
  return out;
}

std::string serialize_dataset(const Dataset& ds) {
  json doc;
  doc["categories"] = json::array();
  for (const auto& c : ds.categories) doc["categories"].push_back(category_json(c));
  doc["width"] = ds.width_cm;
  doc["height"] = ds.height_cm;
  doc["padding"] = ds.padding_cm;
  if (!ds.series.empty()) {
    json series = json::array();
    for (const auto& s : ds.series) {
      json cats = json::array();
      for (const auto& c : s.categories) cats.push_back(category_json(c));
      series.push_back(json{{"name", s.name}, {"categories", std::move(cats)}});
    }
    doc["series"] = std::move(series);
  }
  return doc.dump(2) + "\n";
}

Attribute resolve(const MappingSpec& spec, const Dataset& dataset, std::size_t index,
                  std::optional<std::size_t> ordinal) {
  if (spec.source != Source::constant && index >= dataset.categories.size())
    throw Error(ErrorCode::MissingDatum,
                "no datum at index " + std::to_string(index) + " (dataset has " +
                    std::to_string(dataset.categories.size()) + ")");

  const auto cat = [&]() -> const Category& { return dataset.categories[index]; };
  const auto fraction = [&] {
    const Category& c = cat();
    return std::clamp(c.value / c.range, 0.0, 1.0);
  };
  const std::size_t ord = ordinal.value_or(index);

  switch (spec.channel) {
    case Channel::colour: {
      std::vector<Colour> palette;
      for (const auto& p : spec.palette) palette.push_back(parse_colour(p));
      const std::optional<Gradient> gradient =
          spec.gradient.empty() ? std::nullopt : std::optional(gradient_from_stops(spec.gradient));
      if (palette.empty() && !gradient) palette = default_palette();
      const auto pick = [&](std::size_t k) { return palette[k % palette.size()]; };
      const auto sample = [&](double t) -> Colour {
        if (gradient) return gradient->at(t);
        const auto k = static_cast<std::size_t>(
            std::lround(std::clamp(t, 0.0, 1.0) * static_cast<double>(palette.size() - 1)));
        return pick(k);
      };
      switch (spec.source) {
        case Source::index:
          if (!palette.empty()) return pick(ord);
          return gradient->at(static_cast<double>(ord % 8) / 7.0);
        case Source::value:
        case Source::value_over_range:
          return sample(fraction());
        case Source::name:
          if (!palette.empty()) return pick(hash_name(cat().name));
          return gradient->at(static_cast<double>(hash_name(cat().name) % 1000) / 999.0);
        case Source::constant:
          if (gradient) return gradient->at(spec.constant);
          return pick(static_cast<std::size_t>(std::max(0.0, std::floor(spec.constant))));
      }
      break;
    }
    case Channel::text:
      switch (spec.source) {
        case Source::name: return cat().name;
        case Source::value: return format_number(cat().value);
        case Source::value_over_range: return format_number(fraction());
        case Source::index: return std::to_string(ord);
        case Source::constant: return format_number(spec.constant);
      }
      break;
    default: {
      double v = 0.0;
      switch (spec.source) {
        case Source::value: v = cat().value; break;
        case Source::value_over_range: v = fraction(); break;
        case Source::index: v = static_cast<double>(ord); break;
        case Source::constant: v = spec.constant; break;
        case Source::name:
          throw SchemaError("source", "name source only maps to text or colour channels");
      }
      if (spec.channel == Channel::angle && spec.source == Source::value_over_range) v *= 360.0;
      return v;
    }
  }
  return 0.0;
}

std::vector<Point> scatter_points(const Dataset& dataset) {
  const auto& cats = dataset.categories;
  if (cats.empty()) throw Error(ErrorCode::EmptyPath, "no data to build a path from");
  if (cats.size() % 2 != 0)
    throw Error(ErrorCode::OddPairCount, "scatter data needs (x, y) category pairs");
  std::vector<Point> pts;
  for (std::size_t i = 0; i < cats.size(); i += 2)
    pts.push_back({std::clamp(cats[i].value / cats[i].range, 0.0, 1.0),
                   std::clamp(cats[i + 1].value / cats[i + 1].range, 0.0, 1.0)});
  return pts;
}

FlowPath data_driven_path(const Dataset& dataset, ScatterMode mode) {
  const auto strategy = mode == ScatterMode::scatter_x_axis ? ScatterStrategy::vertical_from_axis
                                                            : ScatterStrategy::path_through_data;
  return scatter_place(scatter_points(dataset), strategy).path;
}

}  // namespace genii
