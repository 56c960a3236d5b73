#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "genii/dataset.hpp"
#include "genii/envelope.hpp"
#include "genii/errors.hpp"
#include "genii/filters.hpp"
#include "genii/marks.hpp"
#include "genii/path_generators.hpp"
#include "genii/seed.hpp"

namespace genii {

inline constexpr int kGeneVersion = 1;

// The persisted design: every parameter that determines a render.
struct Gene {
  int gene_version = kGeneVersion;
  std::string name;
  PathSpec path;
  // Build the path from (x, y) data pairs instead of a generator.
  std::optional<ScatterMode> path_from_data;
  EnvelopeSpec envelope;
  MarkSpec mark;
  std::vector<MappingSpec> mappings;
  std::vector<FilterSpec> filters;  // applied in order
  std::size_t grouping = 1;         // consecutive draw edges per visual group

  Seed seed() const { return Seed::from_name(name); }
  const MappingSpec* mapping(Channel channel) const;

  bool operator==(const Gene&) const = default;
};

// Every violation found in the document. Empty means valid.
std::vector<SchemaIssue> validate_gene(std::string_view text);

// Parses and fully validates. Throws SchemaError carrying every issue; the
// first issue's path names the earliest offending field.
Gene parse_gene(std::string_view text);

// Canonical bytes: sorted keys, shortest round-trip numbers, two-space
// indentation, trailing newline. serialize(parse(serialize(g))) is a fixpoint.
std::string serialize_gene(const Gene& gene);

}  // namespace genii
