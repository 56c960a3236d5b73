#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "genii/colour.hpp"
#include "genii/filters.hpp"
#include "genii/path.hpp"

namespace genii {

struct Category {
  std::string name;
  double value = 0.0;
  double range = 1.0;
  bool operator==(const Category&) const = default;
};

// Extra category groups for multi-series charts (streams, stacked bars).
struct Series {
  std::string name;
  std::vector<Category> categories;
  bool operator==(const Series&) const = default;
};

struct Dataset {
  std::vector<Category> categories;
  double width_cm = 4.4;
  double height_cm = 4.4;
  double padding_cm = 0.0;  // per side
  std::vector<Series> series;

  bool operator==(const Dataset&) const = default;
};

struct ParsedDataset {
  Dataset dataset;
  std::vector<std::string> warnings;  // unknown fields, ignored
};

// Parses and validates the dataset document. Throws SchemaError listing every
// violation with its field path.
ParsedDataset parse_dataset(std::string_view text);
std::string serialize_dataset(const Dataset& dataset);

enum class Channel {
  mark_height,
  mark_width,
  mark_position,
  vertex_position,
  colour,
  angle,
  text,
  filter_param,
};

enum class Source { value, value_over_range, name, index, constant };

std::string_view to_string(Channel c);
std::string_view to_string(Source s);
std::optional<Channel> channel_from_string(std::string_view s);
std::optional<Source> source_from_string(std::string_view s);

struct MappingSpec {
  Channel channel = Channel::mark_height;
  Source source = Source::value_over_range;
  double constant = 0.0;
  std::vector<std::string> palette;  // colour strings
  std::vector<StopSpec> gradient;

  bool operator==(const MappingSpec&) const = default;
};

using Attribute = std::variant<double, Colour, std::string>;

// Attribute for the datum at `index`. `ordinal` replaces the datum index for
// Source::index (the pipeline passes the visual group number). Throws
// Error(MissingDatum) past the end of the data, Error(BadColour) for a bad
// palette entry.
Attribute resolve(const MappingSpec& spec, const Dataset& dataset, std::size_t index,
                  std::optional<std::size_t> ordinal = std::nullopt);

enum class ScatterMode { scatter_x_axis, scatter_data_order };

// Categories read as (x, y) pairs scaled by their ranges. Throws
// Error(OddPairCount) or Error(EmptyPath).
std::vector<Point> scatter_points(const Dataset& dataset);
FlowPath data_driven_path(const Dataset& dataset, ScatterMode mode);

}  // namespace genii
