#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "genii/geometry.hpp"

namespace genii::svg {

// Fixed four-decimal formatting with trailing zeros trimmed; never emits
// "-0" and does not depend on the process locale.
std::string number(double v);

// Escapes &, <, >, " and ' for attribute values and text nodes.
std::string escape(std::string_view text);

// Makes arbitrary text safe inside an XML comment. Only JSON string bodies can
// contain "--", so each such dash becomes a JSON unicode escape and the text
// still parses to the same value.
std::string comment_safe(std::string_view json_text);

// Unit space (y up) to device pixels (y down) over the padded drawable area.
// This is the only place the y axis flips.
struct Affine {
  double width = 0.0;
  double height = 0.0;
  double padding = 0.0;

  double sx() const { return width - 2 * padding; }
  double sy() const { return height - 2 * padding; }
  Point apply(Point p) const { return {padding + p.x * sx(), padding + (1.0 - p.y) * sy()}; }
  // Maps a direction; lengths scale by sx / sy and y flips.
  Point linear(Point v) const { return {v.x * sx(), -v.y * sy()}; }
};

// "M x y L x y ... Z" per ring, even-odd friendly.
std::string path_data(const Region& region, const Affine& affine);
std::string polyline_data(const Ring& line, const Affine& affine);

}  // namespace genii::svg
